#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "gsbmaps/error.hpp"
#include "gsbmaps/maps.hpp"
#include "models.hpp"

using namespace gsb;

namespace {

struct Ex1 {
  ModelPtr m = make_model(2, {2, 2, 2});
  AlgebraSpec d1{BrauerClass(m, {1, 1, 0}), 2, "Δ1"};
  AlgebraSpec d2{BrauerClass(m, {1, 0, 1}), 2, "Δ2"};
  AlgebraSpec d3{BrauerClass(m, {0, 1, 1}), 2, "Δ3"};
};

struct Ex2 {
  ModelPtr m = make_model(2, {4, 2, 2});
  AlgebraSpec d1{BrauerClass(m, {1, 0, 0}), 2, "D1"};
  AlgebraSpec d2{BrauerClass(m, {2, 1, 0}), 2, "D2"};
  AlgebraSpec d3{BrauerClass(m, {2, 0, 1}), 2, "D3"};
};

GSBProduct prod(std::initializer_list<std::pair<AlgebraSpec, Int>> fs) {
  std::vector<GSBFactor> out;
  for (const auto& [a, k] : fs) out.emplace_back(a, k);
  return GSBProduct(std::move(out));
}

// [target] = sum_j i_j [family_j], checked by re-adding
bool relation_holds(const BrauerClass& target, const std::vector<AlgebraSpec>& family,
                    const std::vector<Int>& i) {
  BrauerClass acc = BrauerClass::zero(target.model());
  for (std::size_t j = 0; j < i.size(); ++j)
    for (Int t = 0; t < i[j]; ++t) acc += family[j].cls();
  return acc == target;
}

}  // namespace

TEST_CASE("has_rational_point_over") {
  Ex1 a;
  CHECK_FALSE(has_rational_point_over(GSBFactor(a.d3, 1), prod({{a.d1, 1}, {a.d2, 1}})));
  Ex2 b;
  CHECK(has_rational_point_over(GSBFactor(b.d3, 1), prod({{b.d1, 1}, {b.d2, 1}})));
  CHECK(has_rational_point_over(GSBFactor(b.d1, 0), prod({{b.d1, 0}})));
}

TEST_CASE("exists_rational_map") {
  Ex1 e;
  const auto fwd = exists_rational_map(prod({{e.d1, 0}, {e.d2, 0}}), prod({{e.d1, 0}, {e.d3, 0}}));
  CHECK(fwd.forward);
  CHECK_FALSE(fwd.backward.has_value());
  REQUIRE(fwd.forward_factors.size() == 2);

  const auto no = exists_rational_map(prod({{e.d1, 1}, {e.d2, 1}}), prod({{e.d1, 1}, {e.d3, 1}}));
  CHECK_FALSE(no.forward);
  CHECK(no.forward_factors[0].has_point);
  CHECK_FALSE(no.forward_factors[1].has_point);
  CHECK(no.forward_factors[1].reduced_index == 4);

  const GSBProduct x = prod({{e.d2, 1}, {e.d3, 0}});
  CHECK(exists_rational_map(x, x).forward);
}

TEST_CASE("equivalent") {
  Ex2 b;
  CHECK(equivalent(prod({{b.d1, 1}, {b.d2, 1}}), prod({{b.d1, 1}, {b.d3, 1}})).holds());
  Ex1 a;
  const auto r = equivalent(prod({{a.d1, 1}, {a.d2, 1}}), prod({{a.d1, 1}, {a.d3, 1}}));
  CHECK_FALSE(r.holds());
  CHECK_FALSE(r.forward);
  CHECK_FALSE(*r.backward);
  CHECK(equivalent(prod({{a.d1, 0}}), prod({{a.d1, 0}})).holds());
}

TEST_CASE("classical_criterion") {
  Ex1 a;
  CHECK(classical_criterion(std::vector{a.d1, a.d2}, std::vector{a.d1, a.d3}));
  Ex2 b;
  CHECK_FALSE(classical_criterion(std::vector{b.d1, b.d2}, std::vector{b.d1, b.d3}));
  CHECK(classical_criterion(std::vector{b.d2}, std::vector{b.d2}));
  CHECK_THROWS_AS(classical_criterion(std::vector{a.d1}, std::vector{b.d1}), ModelMismatch);
}

TEST_CASE("lemma_witness") {
  SUBCASE("single factor") {
    Ex2 b;
    const auto w = lemma_witness(b.d1, prod({{b.d1, 1}}));
    REQUIRE(w);
    CHECK(*w == std::vector<Int>{1});
  }
  SUBCASE("exponent hypothesis violated") {
    Ex2 b;
    CHECK_THROWS_AS(lemma_witness(b.d3, prod({{b.d1, 1}, {b.d2, 1}})), PreconditionError);
  }
  SUBCASE("no rational map") {
    Ex1 a;
    CHECK_FALSE(lemma_witness(a.d3, prod({{a.d1, 1}, {a.d2, 1}})).has_value());
  }
  SUBCASE("mixed levels rejected") {
    Ex1 a;
    CHECK_THROWS_AS(lemma_witness(a.d3, prod({{a.d1, 1}, {a.d2, 0}})), PreconditionError);
  }
}

TEST_CASE("prodexp_criterion") {
  SUBCASE("identity families") {
    Ex2 b;
    for (Int k = 0; k < 2; ++k) {
      const auto w = prodexp_criterion(std::vector{b.d1}, std::vector{b.d1}, k);
      REQUIRE(w);
      CHECK(w->alpha == std::vector<std::vector<Int>>{{1}});
      CHECK(w->beta == std::vector<std::vector<Int>>{{1}});
    }
  }
  SUBCASE("biquaternion families") {
    Ex1 a;
    const std::vector l{a.d1, a.d2}, r{a.d1, a.d3};
    CHECK_FALSE(prodexp_criterion(l, r, 1).has_value());
    const auto w = prodexp_criterion(l, r, 0);
    REQUIRE(w);
    for (std::size_t i = 0; i < l.size(); ++i) CHECK(relation_holds(l[i].cls(), r, w->alpha[i]));
    for (std::size_t j = 0; j < r.size(); ++j) CHECK(relation_holds(r[j].cls(), l, w->beta[j]));
    CHECK(w->alpha == std::vector<std::vector<Int>>{{1, 2}, {1, 1}});
  }
  SUBCASE("unequal exponents") {
    Ex2 b;
    CHECK_THROWS_AS(prodexp_criterion(std::vector{b.d1, b.d2}, std::vector{b.d1, b.d3}, 1),
                    PreconditionError);
  }
  SUBCASE("level out of range") {
    Ex1 a;
    CHECK_THROWS_AS(prodexp_criterion(std::vector{a.d1}, std::vector{a.d1}, 2), PreconditionError);
  }
}

TEST_CASE("dimension") {
  auto m = make_model(2, {2, 2, 2});
  const AlgebraSpec quat(BrauerClass(m, {1, 0, 0}), 1);
  const AlgebraSpec biquat(BrauerClass(m, {1, 1, 0}), 2);
  const AlgebraSpec oct(BrauerClass(m, {1, 1, 1}), 3);
  CHECK(dimension(GSBFactor(quat, 0)) == 1);
  CHECK(dimension(GSBFactor(biquat, 1)) == 4);
  CHECK(dimension(GSBFactor(oct, 0)) == 7);
}

TEST_CASE("witnesses re-verify on small models") {
  for (const auto& [name, m] : testing_models::extended_models()) {
    CAPTURE(name);
    const auto algs = testing_models::division_algebras(m);
    const Int p = m->prime();
    for (const AlgebraSpec& d : algs) {
      for (const AlgebraSpec& a : algs) {
        for (const AlgebraSpec& b : algs) {
          if (a.degree_exponent() != d.degree_exponent() || b.degree_exponent() != d.degree_exponent())
            continue;
          for (Int k = 0; k < d.degree_exponent(); ++k) {
            const GSBProduct base = prod({{a, k}, {b, k}});
            const bool point = has_rational_point_over(GSBFactor(d, k), base);
            if (d.exponent() < std::max(a.exponent(), b.exponent())) {
              CHECK_THROWS_AS(lemma_witness(d, base), PreconditionError);
              continue;
            }
            const auto w = lemma_witness(d, base);
            CHECK(w.has_value() == point);
            if (w) {
              CHECK(valuation_sum(*w, p, k) == k);
              CHECK(relation_holds(d.cls(), {a, b}, *w));
            }
          }
        }
      }
    }
  }
}
