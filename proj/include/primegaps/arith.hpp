#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "primegaps/errors.hpp"
#include "primegaps/numeric.hpp"

namespace primegaps::arith {

/// Precomputed smallest-prime-factor table for all n up to a limit.
///
/// Primality is a view on the same data: n >= 2 is prime iff spf(n) == n.
/// Immutable after construction; concurrent reads are safe.
class PrimeTable {
 public:
  // Guard against accidentally requesting hundreds of GB; spf entries are
  // 4 bytes each, so the default cap costs ~800 MB.
  static constexpr u64 kDefaultMaxLimit = 200'000'000;

  u64 limit() const { return limit_; }

  bool is_prime(u64 n) const {
    if (n > limit_) throw invalid_input("PrimeTable::is_prime: n exceeds table limit");
    return n >= 2 && spf_[n] == n;
  }

  /// Smallest prime factor of n, 2 <= n <= limit.
  u32 spf(u64 n) const {
    if (n < 2 || n > limit_) throw invalid_input("PrimeTable::spf: n out of range");
    return spf_[n];
  }

  /// pi(X): number of primes <= X.
  u64 prime_count(u64 X) const;

  /// All primes in [lo, hi] (clamped to the table range).
  std::vector<u64> primes_in(u64 lo, u64 hi) const;

  template <typename Fn>
  void for_each_prime(u64 lo, u64 hi, Fn&& fn) const {
    if (hi > limit_) throw invalid_input("PrimeTable::for_each_prime: range exceeds limit");
    for (u64 n = std::max<u64>(lo, 2); n <= hi; ++n)
      if (spf_[n] == n) fn(n);
  }

 private:
  friend PrimeTable build_prime_table(u64 limit, u64 max_limit);
  u64 limit_ = 0;
  std::vector<u32> spf_;
};

/// Builds the table; rejects limit < 2 and limits over the memory budget.
PrimeTable build_prime_table(u64 limit, u64 max_limit = PrimeTable::kDefaultMaxLimit);

namespace detail {
// Both fillers produce the same array; the segmented one keeps the working
// set cache-sized so large limits stay practical.
std::vector<u32> sieve_spf_simple(u64 limit);
std::vector<u32> sieve_spf_segmented(u64 limit, u64 segment_size = u64{1} << 20);
}  // namespace detail

struct Factorization {
  u64 n = 1;
  std::vector<std::pair<u64, u32>> factors;  // (prime, exponent), primes increasing
};

Factorization factorize(u64 n, const PrimeTable& t);

/// All divisors of the factored number, ascending.
std::vector<u64> divisors(const Factorization& f);

/// von Mangoldt Lambda(n): log p when n = p^k, otherwise 0.
Real von_mangoldt(u64 n, const PrimeTable& t);

/// Moebius mu(n) in {-1, 0, +1}.
int mobius(u64 n, const PrimeTable& t);

u64 euler_phi(u64 n, const PrimeTable& t);

/// True iff every prime factor of n is <= bound. n = 1 is smooth for every
/// bound (empty product).
bool is_smooth(u64 n, u64 bound);
bool is_smooth(u64 n, u64 bound, const PrimeTable& t);

/// Chebyshev psi(X) = sum of Lambda(n) for n <= X.
Real chebyshev_psi(u64 X, const PrimeTable& t);

}  // namespace primegaps::arith
