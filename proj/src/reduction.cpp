#include "gsbmaps/reduction.hpp"

#include <limits>
#include <sstream>
#include <utility>

#include "gsbmaps/detail/tuples.hpp"
#include "gsbmaps/error.hpp"

namespace gsb {

GSBFactor::GSBFactor(AlgebraSpec algebra, Int k) : algebra_(std::move(algebra)), k_(k) {
  if (k_ < 0 || k_ >= algebra_.degree_exponent()) {
    throw PreconditionError("X(" + std::to_string(k_ < 0 ? 0 : ipow(algebra_.group().prime(), k_)) +
                            ";" + algebra_.name() + ") needs 0 <= k < " +
                            std::to_string(algebra_.degree_exponent()) + ", got k = " +
                            std::to_string(k_));
  }
}

Int GSBFactor::reduced_dimension() const { return ipow(algebra_.group().prime(), k_); }

GSBProduct::GSBProduct(std::vector<GSBFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw PreconditionError("a product needs at least one factor");
  for (const GSBFactor& f : factors_) require_same_model(*model(), f.algebra().group());
}

std::string to_string(const GSBFactor& f) {
  return "X(" + std::to_string(f.reduced_dimension()) + ";" + f.algebra().name() + ")";
}

std::string to_string(const GSBProduct& x) {
  std::ostringstream out;
  for (std::size_t j = 0; j < x.size(); ++j) out << (j ? " x " : "") << to_string(x[j]);
  return out.str();
}

Int vp(Int n, Int p) {
  if (n <= 0) throw PreconditionError("vp needs a positive integer, got " + std::to_string(n));
  if (p < 2) throw PreconditionError("vp needs a prime");
  Int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

BrauerClass residual_class(const AlgebraSpec& target, const GSBProduct& base,
                           std::span<const Int> i) {
  require_same_model(target.group(), *base.model());
  if (i.size() != base.size()) {
    throw PreconditionError("tuple has " + std::to_string(i.size()) + " entries for " +
                            std::to_string(base.size()) + " factors");
  }
  BrauerClass r = target.cls();
  for (std::size_t j = 0; j < i.size(); ++j) r -= i[j] * base[j].algebra().cls();
  return r;
}

Int mu(const AlgebraSpec& target, const GSBProduct& base, std::span<const Int> i) {
  const BrauerClass r = residual_class(target, base, i);
  Int value = 1;
  for (std::size_t j = 0; j < i.size(); ++j) {
    if (i[j] < 1) throw PreconditionError("mu needs positive tuple entries");
    const Int pk = base[j].reduced_dimension();
    value *= pk / gcd(i[j], pk);
  }
  return value * generic_index(r);
}

IndexReduction reduced_index(const AlgebraSpec& target, const GSBProduct& base) {
  require_same_model(target.group(), *base.model());
  const Int s = target.degree_exponent();
  for (const GSBFactor& f : base.factors()) {
    if (f.algebra().degree_exponent() != s) {
      throw PreconditionError("index reduction needs equal degrees: " + target.name() +
                              " has degree " + std::to_string(target.degree()) + ", " +
                              f.algebra().name() + " has degree " +
                              std::to_string(f.algebra().degree()));
    }
  }

  IndexReduction best{std::numeric_limits<Int>::max(), {}};
  detail::for_each_tuple(base.size(), target.degree(), [&](const std::vector<Int>& i) {
    const Int m = mu(target, base, i);
    if (m < best.index) best = {m, i};
    // 1 is the floor; the first tuple reaching it is the lexicographic witness
    return best.index == 1;
  });
  return best;
}

}  // namespace gsb
