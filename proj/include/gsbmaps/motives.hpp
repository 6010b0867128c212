#pragma once

// Upper p-motives of products of generalized Severi-Brauer varieties.
//
// Motives are never constructed. A descriptor names the upper motive of
// X(p^k_1;D_1) x ... x X(p^k_n;D_n), and two descriptors name isomorphic
// motives exactly when the underlying products admit rational maps in
// both directions. Shifts are not tracked.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsbmaps/brauer.hpp"
#include "gsbmaps/reduction.hpp"

namespace gsb {

struct MotiveFactor {
  AlgebraSpec algebra;
  Int k;
};

class UpperMotiveDescriptor {
 public:
  /// Validates 0 <= k < s per factor and sorts by (k, s, exponent vector).
  explicit UpperMotiveDescriptor(std::vector<MotiveFactor> factors);

  const std::vector<MotiveFactor>& factors() const { return factors_; }
  const ModelPtr& model() const { return factors_.front().algebra.cls().model(); }
  /// The product of generalized Severi-Brauer varieties it comes from.
  GSBProduct product() const;

  /// Structural equality; labels are ignored.
  friend bool operator==(const UpperMotiveDescriptor& a, const UpperMotiveDescriptor& b);

 private:
  std::vector<MotiveFactor> factors_;
};

/// "M^{1,1}_{D1,D2}"
std::string to_string(const UpperMotiveDescriptor& m);

UpperMotiveDescriptor upper_motive(const GSBProduct& x);

bool motives_isomorphic(const UpperMotiveDescriptor& a, const UpperMotiveDescriptor& b);

/// Isomorphism of M^k_D and M^k2_D2 read off the Brauer classes directly:
/// k = k2 and <[d]> = <[d2]>.
bool classify_single(const AlgebraSpec& d, Int k, const AlgebraSpec& d2, Int k2);

enum class Verdict { Equal, TateOnly, Partial };

std::string_view to_string(Verdict v);

struct MotivePair {
  UpperMotiveDescriptor left;
  UpperMotiveDescriptor right;
};

enum class Side { Left, Right };

struct FamilyComparison {
  Verdict verdict;
  std::vector<MotivePair> shared;
  std::optional<UpperMotiveDescriptor> separating;
  Side separating_side = Side::Left;
};

/// Non-Tate upper motives of the homogeneous varieties X(p^k_j;A_j) over
/// nonempty sub-products, larger products first, then by subset and
/// k-tuple in lexicographic order. Duplicates are dropped.
std::vector<UpperMotiveDescriptor> motive_family(std::span<const AlgebraSpec> algebras);

/// All algebras on both sides must share one degree.
FamilyComparison compare_families(std::span<const AlgebraSpec> left,
                                  std::span<const AlgebraSpec> right);

}  // namespace gsb
