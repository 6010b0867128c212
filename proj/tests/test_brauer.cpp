#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "gsbmaps/brauer.hpp"
#include "gsbmaps/error.hpp"
#include "models.hpp"
#include "oracle.hpp"

using namespace gsb;

namespace {

std::vector<Int> vec(const BrauerClass& c) { return {c.exponents().begin(), c.exponents().end()}; }

struct Ex1 {
  ModelPtr m = make_model(2, {2, 2, 2});
  BrauerClass d1{m, {1, 1, 0}}, d2{m, {1, 0, 1}}, d3{m, {0, 1, 1}};
};

struct Ex2 {
  ModelPtr m = make_model(2, {4, 2, 2});
  BrauerClass d1{m, {1, 0, 0}}, d2{m, {2, 1, 0}}, d3{m, {2, 0, 1}};
};

}  // namespace

TEST_CASE("model construction validates prime and orders") {
  CHECK_NOTHROW(make_model(2, {2, 4}));
  CHECK_THROWS_AS(make_model(4, {4}), PreconditionError);
  CHECK_THROWS_AS(make_model(2, {6}), PreconditionError);
  CHECK_THROWS_AS(make_model(3, {1}), PreconditionError);
  CHECK_THROWS_AS(make_model(2, {}), PreconditionError);
}

TEST_CASE("classes are stored reduced") {
  auto m = make_model(2, {4, 2});
  BrauerClass c(m, {-1, 5});
  CHECK(vec(c) == std::vector<Int>{3, 1});
  CHECK_THROWS_AS(BrauerClass(m, {1}), PreconditionError);
}

TEST_CASE("combine") {
  SUBCASE("zero coefficient") {
    Ex1 e;
    const Term t[] = {{e.d1, 0}};
    CHECK(combine(t).is_zero());
  }
  SUBCASE("even multiples vanish in exponent-2 components") {
    Ex1 e;
    const Term t[] = {{e.d3, 1}, {e.d1, -2}, {e.d2, -2}};
    CHECK(vec(combine(t)) == std::vector<Int>{0, 1, 1});
  }
  SUBCASE("mixed orders (4,2,2)") {
    Ex2 e;
    const Term t[] = {{e.d3, 1}, {e.d1, -2}, {e.d2, -2}};
    const BrauerClass r = combine(t);
    CHECK(vec(r) == std::vector<Int>{0, 0, 1});

    oracle::GroupTable g({4, 2, 2});
    const Int x = g.add[g.add[oracle::encode(g, e.d3)][g.times(-2, oracle::encode(g, e.d1))]]
                       [g.times(-2, oracle::encode(g, e.d2))];
    CHECK(x == oracle::encode(g, r));
  }
  SUBCASE("model mismatch") {
    Ex1 a;
    Ex2 b;
    const Term t[] = {{a.d1, 1}, {b.d1, 1}};
    CHECK_THROWS_AS(combine(t), ModelMismatch);
  }
}

TEST_CASE("class_exponent") {
  Ex2 e;
  CHECK(class_exponent(BrauerClass::zero(e.m)) == 1);
  CHECK(class_exponent(e.d2) == 2);
  CHECK(class_exponent(e.d1) == 4);
}

TEST_CASE("generic_index") {
  Ex1 a;
  Ex2 b;
  CHECK(generic_index(BrauerClass::zero(a.m)) == 1);
  CHECK(generic_index(a.d1) == 4);
  CHECK(generic_index(b.d3) == 4);

  auto weird = make_model(2, {2}, static_cast<IndexRule>(7));
  CHECK_THROWS_AS(generic_index(BrauerClass(weird, {1})), UnsupportedModel);
}

TEST_CASE("subgroup_generated") {
  SUBCASE("empty generating set") {
    Ex1 e;
    const Subgroup s = subgroup_generated(e.m, std::vector<BrauerClass>{});
    REQUIRE(s.size() == 1);
    CHECK(s.elements().front().is_zero());
  }
  SUBCASE("two biquaternion classes") {
    Ex1 e;
    const BrauerClass g[] = {e.d1, e.d2};
    const Subgroup s = subgroup_generated(e.m, g);
    std::vector<std::vector<Int>> got;
    for (const auto& c : s.elements()) got.push_back(vec(c));
    CHECK(got == std::vector<std::vector<Int>>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  }
  SUBCASE("cyclic subgroup of a generator") {
    Ex2 e;
    const BrauerClass g[] = {e.d1};
    const Subgroup s = subgroup_generated(e.m, g);
    std::vector<std::vector<Int>> got;
    for (const auto& c : s.elements()) got.push_back(vec(c));
    CHECK(got == std::vector<std::vector<Int>>{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}});
  }
}

TEST_CASE("subgroups_equal") {
  Ex1 a;
  const BrauerClass l1[] = {a.d1, a.d2}, r1[] = {a.d1, a.d3};
  CHECK(subgroups_equal(subgroup_generated(a.m, l1), subgroup_generated(a.m, r1)));

  Ex2 b;
  const BrauerClass l2[] = {b.d1, b.d2}, r2[] = {b.d1, b.d3};
  CHECK_FALSE(subgroups_equal(subgroup_generated(b.m, l2), subgroup_generated(b.m, r2)));

  const BrauerClass c[] = {b.d2};
  CHECK(subgroups_equal(subgroup_generated(b.m, c), subgroup_generated(b.m, c)));

  CHECK_THROWS_AS(subgroups_equal(subgroup_generated(a.m, l1), subgroup_generated(b.m, l2)),
                  ModelMismatch);
}

TEST_CASE("AlgebraSpec enforces division") {
  Ex1 e;
  CHECK(AlgebraSpec(e.d1, 2, "Δ1").degree() == 4);
  CHECK_THROWS_AS(AlgebraSpec(e.d1, 3, "bad"), PreconditionError);
  CHECK(AlgebraSpec::of_class(e.d1).degree_exponent() == 2);
}

TEST_CASE("properties over every class of the extended models") {
  for (const auto& [name, m] : testing_models::extended_models()) {
    CAPTURE(name);
    oracle::GroupTable g(std::vector<Int>(m->orders().begin(), m->orders().end()));
    const auto classes = testing_models::all_classes(m);
    for (const BrauerClass& c : classes) {
      CAPTURE(to_string(c));
      const Int x = oracle::encode(g, c);
      const Int ind = generic_index(c);
      const Int exp = class_exponent(c);
      CHECK(exp == g.order(x));
      CHECK(ind == g.generic_index(x));
      CHECK(ind % exp == 0);
      CHECK(generic_index(-c) == ind);
      CHECK(class_exponent(-c) == exp);
      if (exp == 1 || exp == m->prime()) {
        Int nonzero = 0;
        for (Int e : c.exponents()) nonzero += e != 0;
        CHECK(ind == ipow(m->prime(), nonzero));
      }
    }

    for (const BrauerClass& a : classes) {
      const BrauerClass ga[] = {a};
      const Subgroup sa = subgroup_generated(m, ga);
      // idempotent
      CHECK(subgroups_equal(sa, subgroup_generated(m, sa.elements())));
      // closure against the oracle
      std::set<Int> got;
      for (const auto& c : sa.elements()) got.insert(oracle::encode(g, c));
      CHECK(got == g.span({oracle::encode(g, a)}));

      for (const BrauerClass& b : classes) {
        const BrauerClass gb[] = {b};
        const bool eq = subgroups_equal(sa, subgroup_generated(m, gb));
        const Int xa = oracle::encode(g, a), xb = oracle::encode(g, b);
        CHECK(eq == (g.in_span(xa, {xb}) && g.in_span(xb, {xa})));
        CHECK(vec(a + b) == g.decode(g.add[xa][xb]));
      }
    }
  }
}
