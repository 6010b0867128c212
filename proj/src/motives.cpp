#include "gsbmaps/motives.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "gsbmaps/error.hpp"
#include "gsbmaps/maps.hpp"

namespace gsb {

namespace {

auto sort_key(const MotiveFactor& f) {
  const auto e = f.algebra.cls().exponents();
  return std::make_tuple(f.k, f.algebra.degree_exponent(), std::vector<Int>(e.begin(), e.end()));
}

bool same_factor(const MotiveFactor& a, const MotiveFactor& b) {
  return a.k == b.k && a.algebra.degree_exponent() == b.algebra.degree_exponent() &&
         a.algebra.cls() == b.algebra.cls();
}

// Subsets of {0..n-1} with larger subsets first, lexicographic within a size.
std::vector<std::vector<std::size_t>> subsets_by_size(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t size = n; size >= 1; --size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<std::size_t> s;
      for (std::size_t j = 0; j < n; ++j)
        if (pick[j]) s.push_back(j);
      out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

}  // namespace

UpperMotiveDescriptor::UpperMotiveDescriptor(std::vector<MotiveFactor> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw PreconditionError("an upper motive needs at least one factor");
  for (const MotiveFactor& f : factors_) {
    require_same_model(*model(), f.algebra.group());
    if (f.k < 0 || f.k >= f.algebra.degree_exponent()) {
      throw PreconditionError("upper motive factor " + f.algebra.name() + " needs 0 <= k < " +
                              std::to_string(f.algebra.degree_exponent()));
    }
  }
  std::stable_sort(factors_.begin(), factors_.end(), [](const MotiveFactor& a, const MotiveFactor& b) {
    const auto ka = sort_key(a);
    const auto kb = sort_key(b);
    if (ka != kb) return ka < kb;
    return a.algebra.label() < b.algebra.label();
  });
}

GSBProduct UpperMotiveDescriptor::product() const {
  std::vector<GSBFactor> fs;
  fs.reserve(factors_.size());
  for (const MotiveFactor& f : factors_) fs.emplace_back(f.algebra, f.k);
  return GSBProduct(std::move(fs));
}

bool operator==(const UpperMotiveDescriptor& a, const UpperMotiveDescriptor& b) {
  return std::equal(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
                    same_factor);
}

std::string to_string(const UpperMotiveDescriptor& m) {
  std::ostringstream ks, ds;
  for (std::size_t j = 0; j < m.factors().size(); ++j) {
    ks << (j ? "," : "") << m.factors()[j].k;
    ds << (j ? "," : "") << m.factors()[j].algebra.name();
  }
  return "M^{" + ks.str() + "}_{" + ds.str() + "}";
}

UpperMotiveDescriptor upper_motive(const GSBProduct& x) {
  std::vector<MotiveFactor> fs;
  fs.reserve(x.size());
  for (const GSBFactor& f : x.factors()) fs.push_back({f.algebra(), f.k()});
  return UpperMotiveDescriptor(std::move(fs));
}

bool motives_isomorphic(const UpperMotiveDescriptor& a, const UpperMotiveDescriptor& b) {
  return equivalent(a.product(), b.product()).holds();
}

bool classify_single(const AlgebraSpec& d, Int k, const AlgebraSpec& d2, Int k2) {
  require_same_model(d.group(), d2.group());
  if (k < 0 || k >= d.degree_exponent() || k2 < 0 || k2 >= d2.degree_exponent()) {
    throw PreconditionError("classify_single needs 0 <= k < v_p(deg) on both sides");
  }
  if (k != k2) return false;
  const BrauerClass a[] = {d.cls()};
  const BrauerClass b[] = {d2.cls()};
  return subgroups_equal(subgroup_generated(d.cls().model(), a),
                         subgroup_generated(d2.cls().model(), b));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal:
      return "EQUAL";
    case Verdict::TateOnly:
      return "TATE_ONLY";
    case Verdict::Partial:
      return "PARTIAL";
  }
  return "UNKNOWN";
}

std::vector<UpperMotiveDescriptor> motive_family(std::span<const AlgebraSpec> algebras) {
  std::vector<UpperMotiveDescriptor> out;
  for (const auto& subset : subsets_by_size(algebras.size())) {
    // odometer over k_j in [0, s_j)
    std::vector<Int> ks(subset.size(), 0);
    const bool empty_range = std::any_of(subset.begin(), subset.end(), [&](std::size_t j) {
      return algebras[j].degree_exponent() == 0;
    });
    if (empty_range) continue;
    while (true) {
      std::vector<MotiveFactor> fs;
      for (std::size_t t = 0; t < subset.size(); ++t) fs.push_back({algebras[subset[t]], ks[t]});
      UpperMotiveDescriptor m(std::move(fs));
      if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));

      std::size_t t = subset.size();
      while (t > 0 && ks[t - 1] + 1 == algebras[subset[t - 1]].degree_exponent()) ks[--t] = 0;
      if (t == 0) break;
      ++ks[t - 1];
    }
  }
  return out;
}

FamilyComparison compare_families(std::span<const AlgebraSpec> left,
                                  std::span<const AlgebraSpec> right) {
  if (left.empty() || right.empty()) throw PreconditionError("families must be nonempty");
  const Int s = left.front().degree_exponent();
  for (auto family : {left, right}) {
    for (const AlgebraSpec& a : family) {
      require_same_model(left.front().group(), a.group());
      if (a.degree_exponent() != s) {
        throw PreconditionError("compare_families needs one common degree; " + a.name() +
                                " has degree " + std::to_string(a.degree()) + ", " +
                                left.front().name() + " has degree " +
                                std::to_string(left.front().degree()));
      }
    }
  }

  const auto lm = motive_family(left);
  const auto rm = motive_family(right);
  std::vector<bool> left_matched(lm.size(), false);
  std::vector<bool> right_matched(rm.size(), false);

  FamilyComparison out{Verdict::TateOnly, {}, std::nullopt, Side::Left};
  for (std::size_t a = 0; a < lm.size(); ++a) {
    for (std::size_t b = 0; b < rm.size(); ++b) {
      if (motives_isomorphic(lm[a], rm[b])) {
        out.shared.push_back({lm[a], rm[b]});
        left_matched[a] = right_matched[b] = true;
      }
    }
  }

  // most factors first, then highest total level; ties keep enumeration order
  auto best_unmatched = [](const std::vector<UpperMotiveDescriptor>& ms, const std::vector<bool>& matched) {
    std::optional<std::size_t> best;
    auto rank = [&](std::size_t i) {
      Int levels = 0;
      for (const MotiveFactor& f : ms[i].factors()) levels += f.k;
      return std::make_pair(ms[i].factors().size(), levels);
    };
    for (std::size_t i = 0; i < ms.size(); ++i)
      if (!matched[i] && (!best || rank(*best) < rank(i))) best = i;
    return best;
  };
  if (const auto la = best_unmatched(lm, left_matched)) {
    out.separating = lm[*la];
    out.separating_side = Side::Left;
  } else if (const auto rb = best_unmatched(rm, right_matched)) {
    out.separating = rm[*rb];
    out.separating_side = Side::Right;
  }

  if (out.shared.empty()) {
    out.verdict = Verdict::TateOnly;
  } else if (out.separating) {
    out.verdict = Verdict::Partial;
  } else {
    out.verdict = Verdict::Equal;
  }
  return out;
}

}  // namespace gsb
