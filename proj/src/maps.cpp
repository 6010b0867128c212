#include "gsbmaps/maps.hpp"

#include <algorithm>
#include <string>

#include "gsbmaps/detail/tuples.hpp"
#include "gsbmaps/error.hpp"

namespace gsb {

namespace {

void require_nonempty(std::span<const AlgebraSpec> family, const char* what) {
  if (family.empty()) throw PreconditionError(std::string(what) + " family is empty");
}

void require_common_degree(std::span<const AlgebraSpec> family, Int s) {
  for (const AlgebraSpec& a : family) {
    if (a.degree_exponent() != s) {
      throw PreconditionError("all algebras must share one degree; " + a.name() + " has degree " +
                              std::to_string(a.degree()));
    }
  }
}

void require_equal_exponents(std::span<const AlgebraSpec> family, const char* side) {
  for (const AlgebraSpec& a : family) {
    if (a.exponent() != family.front().exponent()) {
      throw PreconditionError(std::string("exponents differ within the ") + side + " family: exp(" +
                              family.front().name() + ") = " +
                              std::to_string(family.front().exponent()) + ", exp(" + a.name() +
                              ") = " + std::to_string(a.exponent()));
    }
  }
}

std::vector<AlgebraSpec> algebras_of(const GSBProduct& x) {
  std::vector<AlgebraSpec> out;
  out.reserve(x.size());
  for (const GSBFactor& f : x.factors()) out.push_back(f.algebra());
  return out;
}

std::vector<FactorDecision> decide_all(const GSBProduct& source, const GSBProduct& target) {
  std::vector<FactorDecision> out;
  out.reserve(target.size());
  for (std::size_t j = 0; j < target.size(); ++j) out.push_back(decide_factor(target[j], source, j));
  return out;
}

bool all_points(const std::vector<FactorDecision>& ds) {
  return std::all_of(ds.begin(), ds.end(), [](const FactorDecision& d) { return d.has_point; });
}

}  // namespace

FactorDecision decide_factor(const GSBFactor& target, const GSBProduct& base, std::size_t position) {
  IndexReduction r = reduced_index(target.algebra(), base);
  const bool point = target.reduced_dimension() % r.index == 0;
  return {position, r.index, std::move(r.witness), point};
}

bool has_rational_point_over(const GSBFactor& target, const GSBProduct& base) {
  return decide_factor(target, base).has_point;
}

RationalMapReport exists_rational_map(const GSBProduct& source, const GSBProduct& target) {
  RationalMapReport report;
  report.forward_factors = decide_all(source, target);
  report.forward = all_points(report.forward_factors);
  return report;
}

RationalMapReport equivalent(const GSBProduct& a, const GSBProduct& b) {
  RationalMapReport report = exists_rational_map(a, b);
  report.backward_factors = decide_all(b, a);
  report.backward = all_points(report.backward_factors);
  return report;
}

bool classical_criterion(std::span<const AlgebraSpec> left, std::span<const AlgebraSpec> right) {
  require_nonempty(left, "left");
  require_nonempty(right, "right");
  const ModelPtr& model = left.front().cls().model();
  const auto lc = classes_of(left);
  const auto rc = classes_of(right);
  return subgroups_equal(subgroup_generated(model, lc), subgroup_generated(model, rc));
}

Int valuation_sum(std::span<const Int> i, Int p, Int k) {
  const Int pk = ipow(p, k);
  Int total = 0;
  for (Int x : i) total += vp(gcd(x, pk), p);
  return total;
}

std::optional<std::vector<Int>> find_relation(const BrauerClass& target,
                                              std::span<const AlgebraSpec> family, Int k,
                                              Int required_sum) {
  require_nonempty(family, "relation");
  for (const AlgebraSpec& a : family) require_same_model(target.group(), a.group());
  const Int p = target.group().prime();
  const Int hi = family.front().degree();

  std::optional<std::vector<Int>> found;
  detail::for_each_tuple(family.size(), hi, [&](const std::vector<Int>& i) {
    if (valuation_sum(i, p, k) != required_sum) return false;
    BrauerClass r = target;
    for (std::size_t j = 0; j < i.size(); ++j) r -= i[j] * family[j].cls();
    if (!r.is_zero()) return false;
    found = i;
    return true;
  });
  return found;
}

std::optional<std::vector<Int>> lemma_witness(const AlgebraSpec& target, const GSBProduct& base) {
  const Int k = base[0].k();
  for (const GSBFactor& f : base.factors()) {
    if (f.k() != k) throw PreconditionError("all base factors must share one reduced dimension");
    if (f.algebra().exponent() > target.exponent()) {
      throw PreconditionError("exponent hypothesis fails: exp(" + target.name() + ") = " +
                              std::to_string(target.exponent()) + " < exp(" + f.algebra().name() +
                              ") = " + std::to_string(f.algebra().exponent()));
    }
  }
  // also enforces the common degree and k < s
  if (!has_rational_point_over(GSBFactor(target, k), base)) return std::nullopt;

  const Int n = static_cast<Int>(base.size());
  const auto family = algebras_of(base);
  auto i = find_relation(target.cls(), family, k, k * (n - 1));
  if (!i) {
    throw InvariantError("rational map to X(" + std::to_string(base[0].reduced_dimension()) + ";" +
                         target.name() + ") exists but no exponent relation was found");
  }
  return i;
}

std::optional<ProdexpWitness> prodexp_criterion(std::span<const AlgebraSpec> left,
                                                std::span<const AlgebraSpec> right, Int k) {
  require_nonempty(left, "left");
  require_nonempty(right, "right");
  const Int s = left.front().degree_exponent();
  require_common_degree(left, s);
  require_common_degree(right, s);
  for (const AlgebraSpec& a : right) require_same_model(left.front().group(), a.group());
  if (k < 0 || k >= s) {
    throw PreconditionError("level k = " + std::to_string(k) + " outside [0, " + std::to_string(s) +
                            ")");
  }
  require_equal_exponents(left, "left");
  require_equal_exponents(right, "right");

  const Int n = static_cast<Int>(left.size());
  const Int m = static_cast<Int>(right.size());
  ProdexpWitness w;
  // Each row is an independent search, so row-wise lexicographic minima
  // give the lexicographically smallest matrix.
  for (const AlgebraSpec& d : left) {
    auto row = find_relation(d.cls(), right, k, (m - 1) * k);
    if (!row) return std::nullopt;
    w.alpha.push_back(std::move(*row));
  }
  for (const AlgebraSpec& d : right) {
    auto row = find_relation(d.cls(), left, k, (n - 1) * k);
    if (!row) return std::nullopt;
    w.beta.push_back(std::move(*row));
  }
  return w;
}

Int dimension(const GSBFactor& f) {
  const Int pk = f.reduced_dimension();
  return pk * (f.algebra().degree() - pk);
}

GSBProduct uniform_product(std::span<const AlgebraSpec> algebras, Int k) {
  std::vector<GSBFactor> fs;
  fs.reserve(algebras.size());
  for (const AlgebraSpec& a : algebras) fs.emplace_back(a, k);
  return GSBProduct(std::move(fs));
}

}  // namespace gsb
