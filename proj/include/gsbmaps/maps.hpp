#pragma once

// Rational maps between products of generalized Severi-Brauer varieties.
//
// A rational map Y --> X(p^k_1;D_1) x ... x X(p^k_n;D_n) exists iff every
// factor X(p^k_j;D_j) has a rational point over F(Y), which holds iff the
// index of D_j over F(Y) divides p^k_j. Everything here reduces to
// reduced_index plus exhaustive searches for exponent relations.

#include <optional>
#include <span>
#include <vector>

#include "gsbmaps/brauer.hpp"
#include "gsbmaps/reduction.hpp"

namespace gsb {

struct FactorDecision {
  std::size_t factor;    // position in the target product
  Int reduced_index;     // index of the factor's algebra over F(source)
  std::vector<Int> witness;  // minimizing tuple for reduced_index
  bool has_point;        // reduced_index divides p^k
};

struct RationalMapReport {
  bool forward = false;
  /// Only set by equivalent(); exists_rational_map decides one direction.
  std::optional<bool> backward;
  std::vector<FactorDecision> forward_factors;
  std::vector<FactorDecision> backward_factors;

  bool holds() const { return forward && backward.value_or(true); }
};

FactorDecision decide_factor(const GSBFactor& target, const GSBProduct& base,
                             std::size_t position = 0);

bool has_rational_point_over(const GSBFactor& target, const GSBProduct& base);

/// source --> target, decided factor by factor over F(source).
RationalMapReport exists_rational_map(const GSBProduct& source, const GSBProduct& target);

/// Rational maps in both directions.
RationalMapReport equivalent(const GSBProduct& a, const GSBProduct& b);

/// Same subgroup of Br(F) generated by both families.
bool classical_criterion(std::span<const AlgebraSpec> left, std::span<const AlgebraSpec> right);

/// sum_j v_p(gcd(i_j, p^k))
Int valuation_sum(std::span<const Int> i, Int p, Int k);

/// Lexicographically smallest i in [1, p^s]^n with
///   [target] = sum_j i_j [family_j]   and   valuation_sum(i, p, k) = required_sum.
std::optional<std::vector<Int>> find_relation(const BrauerClass& target,
                                              std::span<const AlgebraSpec> family, Int k,
                                              Int required_sum);

/// Exponent relation behind a rational map base --> X(p^k;target) when
/// every base factor has the same k and exp(target) >= exp(D_j) for all j.
/// Returns nullopt when no such rational map exists. Throws
/// PreconditionError if the exponent hypothesis fails.
std::optional<std::vector<Int>> lemma_witness(const AlgebraSpec& target, const GSBProduct& base);

struct ProdexpWitness {
  std::vector<std::vector<Int>> alpha;  // n x m: [D_i] = sum_u alpha[i][u] [D'_u]
  std::vector<std::vector<Int>> beta;   // m x n: [D'_j] = sum_v beta[j][v] [D_v]
};

/// Relation matrices characterising rational maps both ways between the
/// level-k products of left and right, under equal exponents within each
/// family. Throws PreconditionError if that hypothesis fails.
std::optional<ProdexpWitness> prodexp_criterion(std::span<const AlgebraSpec> left,
                                                std::span<const AlgebraSpec> right, Int k);

/// dim X(p^k;D) = p^k (p^s - p^k)
Int dimension(const GSBFactor& f);

/// The level-k product X(p^k;A_1) x ... x X(p^k;A_n).
GSBProduct uniform_product(std::span<const AlgebraSpec> algebras, Int k);

}  // namespace gsb
