#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "gsbmaps/error.hpp"
#include "gsbmaps/motives.hpp"
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

UpperMotiveDescriptor motive(std::initializer_list<std::pair<AlgebraSpec, Int>> fs) {
  std::vector<GSBFactor> out;
  for (const auto& [a, k] : fs) out.emplace_back(a, k);
  return upper_motive(GSBProduct(std::move(out)));
}

}  // namespace

TEST_CASE("upper_motive canonical form") {
  Ex1 a;
  const auto m = motive({{a.d1, 0}});
  REQUIRE(m.factors().size() == 1);
  CHECK(m.factors()[0].k == 0);
  CHECK(motive({{a.d2, 1}, {a.d1, 1}}) == motive({{a.d1, 1}, {a.d2, 1}}));
  // exponent vector (1,0,1) sorts before (1,1,0)
  CHECK(to_string(motive({{a.d2, 1}, {a.d1, 1}})) == "M^{1,1}_{Δ2,Δ1}");

  Ex2 b;
  const auto m2 = motive({{b.d2, 1}, {b.d1, 1}});
  CHECK(m2.factors()[0].algebra.name() == "D1");
  CHECK(m2.factors()[1].algebra.name() == "D2");
  // k sorts before the class
  CHECK(to_string(motive({{b.d1, 1}, {b.d2, 0}})) == "M^{0,1}_{D2,D1}");

  CHECK_THROWS_AS(UpperMotiveDescriptor({MotiveFactor{a.d1, 2}}), PreconditionError);
  CHECK_THROWS_AS(UpperMotiveDescriptor({}), PreconditionError);
}

TEST_CASE("motives_isomorphic") {
  Ex1 a;
  CHECK(motives_isomorphic(motive({{a.d1, 0}, {a.d2, 0}}), motive({{a.d1, 0}, {a.d3, 0}})));
  CHECK_FALSE(motives_isomorphic(motive({{a.d1, 1}, {a.d2, 1}}), motive({{a.d1, 1}, {a.d3, 1}})));
  const auto m = motive({{a.d3, 1}, {a.d2, 0}});
  CHECK(motives_isomorphic(m, m));
}

TEST_CASE("classify_single") {
  Ex2 b;
  CHECK(classify_single(b.d1, 1, b.d1, 1));
  const AlgebraSpec d1_cubed(3 * b.d1.cls(), 2, "D1^3");
  CHECK(generic_index(d1_cubed.cls()) == 4);
  CHECK(classify_single(b.d1, 0, d1_cubed, 0));
  CHECK_FALSE(classify_single(b.d1, 0, b.d1, 1));

  Ex1 a;
  CHECK_FALSE(classify_single(a.d1, 0, a.d3, 0));
  CHECK_THROWS_AS(classify_single(a.d1, 2, a.d3, 0), PreconditionError);
}

TEST_CASE("motive_family enumeration order") {
  Ex1 a;
  const auto fam = motive_family(std::vector{a.d1, a.d2});
  REQUIRE(fam.size() == 8);
  CHECK(to_string(fam[0]) == "M^{0,0}_{Δ2,Δ1}");
  CHECK(to_string(fam[3]) == "M^{1,1}_{Δ2,Δ1}");
  CHECK(to_string(fam[4]) == "M^{0}_{Δ1}");
  CHECK(to_string(fam[7]) == "M^{1}_{Δ2}");
  // duplicates collapse
  CHECK(motive_family(std::vector{a.d1, a.d1}).size() == 2 + 3);
}

TEST_CASE("compare_families") {
  SUBCASE("same subgroup") {
    Ex2 b;
    const AlgebraSpec d1_cubed(3 * b.d1.cls(), 2, "D1^3");
    const auto c = compare_families(std::vector{b.d1}, std::vector{d1_cubed});
    CHECK(c.verdict == Verdict::Equal);
    CHECK_FALSE(c.separating.has_value());
    CHECK(c.shared.size() == 2);
  }
  SUBCASE("different subgroups") {
    Ex1 a;
    const auto c = compare_families(std::vector{a.d1}, std::vector{a.d3});
    CHECK(c.verdict == Verdict::TateOnly);
    CHECK(c.shared.empty());
  }
  SUBCASE("products break the dichotomy") {
    Ex1 a;
    const auto c = compare_families(std::vector{a.d1, a.d2}, std::vector{a.d1, a.d3});
    CHECK(c.verdict == Verdict::Partial);
    REQUIRE_FALSE(c.shared.empty());
    CHECK(c.shared.front().left == motive({{a.d1, 0}, {a.d2, 0}}));
    CHECK(c.shared.front().right == motive({{a.d1, 0}, {a.d3, 0}}));
    REQUIRE(c.separating.has_value());
    CHECK(*c.separating == motive({{a.d1, 1}, {a.d2, 1}}));
    CHECK(c.separating_side == Side::Left);
  }
  SUBCASE("mixed degrees rejected") {
    Ex1 a;
    const AlgebraSpec quat(BrauerClass(a.m, {1, 0, 0}), 1, "Q");
    CHECK_THROWS_AS(compare_families(std::vector{a.d1}, std::vector{quat}), PreconditionError);
  }
}

TEST_CASE("isomorphism is an equivalence relation on single and paired descriptors") {
  for (const auto& [name, m] : testing_models::core_models()) {
    CAPTURE(name);
    const auto algs = testing_models::division_algebras(m);
    for (Int s = 1; s <= 3; ++s) {
      std::vector<AlgebraSpec> same;
      for (const auto& a : algs)
        if (a.degree_exponent() == s) same.push_back(a);
      if (same.empty()) continue;
      std::vector<UpperMotiveDescriptor> ds;
      for (const auto& a : same)
        for (Int k = 0; k < s; ++k) ds.push_back(motive({{a, k}}));
      for (std::size_t i = 0; i < same.size(); ++i)
        for (std::size_t j = i; j < same.size(); ++j)
          for (Int k = 0; k < s; ++k) ds.push_back(motive({{same[i], k}, {same[j], k}}));

      const std::size_t n = ds.size();
      std::vector<std::vector<bool>> iso(n, std::vector<bool>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) iso[i][j] = motives_isomorphic(ds[i], ds[j]);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(iso[i][i]);
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(iso[i][j] == iso[j][i]);
          if (!iso[i][j]) continue;
          for (std::size_t l = 0; l < n; ++l)
            if (iso[j][l]) CHECK(iso[i][l]);
        }
      }
    }
  }
}
