#include "gsbmaps/arith.hpp"

#include <limits>
#include <numeric>

#include "gsbmaps/error.hpp"

namespace gsb {

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Int ipow(Int base, Int exp) {
  if (exp < 0) throw PreconditionError("negative exponent in ipow");
  Int r = 1;
  for (Int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<Int>::max() / base)
      throw PreconditionError("integer overflow in ipow");
    r *= base;
  }
  return r;
}

bool is_power_of(Int n, Int p) {
  if (n < 1 || p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

Int log_p(Int n, Int p) {
  if (!is_power_of(n, p)) throw PreconditionError("value is not a power of the prime");
  Int e = 0;
  while (n > 1) {
    n /= p;
    ++e;
  }
  return e;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }
Int lcm(Int a, Int b) { return std::lcm(a, b); }

}  // namespace gsb
