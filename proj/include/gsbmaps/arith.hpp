#pragma once

#include <cstdint>

namespace gsb {

using Int = std::int64_t;

bool is_prime(Int n);

/// base^exp; throws PreconditionError on overflow or a negative exponent.
Int ipow(Int base, Int exp);

/// True iff n = p^e for some e >= 0.
bool is_power_of(Int n, Int p);

/// The e with p^e = n. n must be a power of p.
Int log_p(Int n, Int p);

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

/// Mathematical modulus, always in [0, m).
inline Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace gsb
