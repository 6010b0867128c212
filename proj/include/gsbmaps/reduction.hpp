#pragma once

// Index reduction over function fields of products of generalized
// Severi-Brauer varieties X(p^k_1;D_1) x ... x X(p^k_n;D_n).

#include <span>
#include <string>
#include <vector>

#include "gsbmaps/brauer.hpp"

namespace gsb {

/// X(p^k; D): right ideals of reduced dimension p^k in the division algebra D.
class GSBFactor {
 public:
  /// Requires 0 <= k < s where deg D = p^s.
  GSBFactor(AlgebraSpec algebra, Int k);

  const AlgebraSpec& algebra() const { return algebra_; }
  Int k() const { return k_; }
  /// p^k
  Int reduced_dimension() const;

 private:
  AlgebraSpec algebra_;
  Int k_;
};

class GSBProduct {
 public:
  /// Nonempty, all factors over one group model.
  explicit GSBProduct(std::vector<GSBFactor> factors);

  const std::vector<GSBFactor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  const GSBFactor& operator[](std::size_t j) const { return factors_[j]; }
  const ModelPtr& model() const { return factors_.front().algebra().cls().model(); }
  Int prime() const { return model()->prime(); }

 private:
  std::vector<GSBFactor> factors_;
};

/// "X(4;D)" with the reduced dimension written out, as in the CLI grammar.
std::string to_string(const GSBFactor& f);
/// "X(2;D1) x X(2;D2)"
std::string to_string(const GSBProduct& x);

/// p-adic valuation; n must be positive.
Int vp(Int n, Int p);

/// prod_j p^k_j / gcd(i_j, p^k_j) * ind(D - sum_j i_j D_j)
Int mu(const AlgebraSpec& target, const GSBProduct& base, std::span<const Int> i);

/// The residual class D - sum_j i_j D_j whose index enters mu.
BrauerClass residual_class(const AlgebraSpec& target, const GSBProduct& base,
                           std::span<const Int> i);

struct IndexReduction {
  Int index;
  /// Lexicographically smallest tuple in [1, p^s]^n attaining the minimum.
  std::vector<Int> witness;
};

/// Index of target over F(base): min of mu over [1, p^s]^n. All algebras
/// involved must share the degree p^s.
IndexReduction reduced_index(const AlgebraSpec& target, const GSBProduct& base);

}  // namespace gsb
