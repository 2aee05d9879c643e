#pragma once

#include <complex>
#include <cstdint>
#include <numeric>

namespace primegaps {

// All real-valued quantities are carried at the widest standard precision of
// the host (80-bit extended on x86-64).
using Real = long double;
using Complex = std::complex<Real>;

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Inverse of a modulo prime p, for a not divisible by p.
inline u64 invmod_prime(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Number of multiples of m in the half-open interval [lo, hi).
// 0 counts as a multiple of every m.
inline u64 count_multiples(u64 m, u64 lo, u64 hi) {
  if (hi <= lo) return 0;
  u64 lt_hi = (hi - 1) / m + 1;                   // multiples in [0, hi)
  u64 lt_lo = lo == 0 ? 0 : (lo - 1) / m + 1;     // multiples in [0, lo)
  return lt_hi - lt_lo;
}

}  // namespace primegaps
