#include "primegaps/arith.hpp"

#include <algorithm>
#include <cmath>

namespace primegaps::arith {

namespace detail {

std::vector<u32> sieve_spf_simple(u64 limit) {
  std::vector<u32> spf(limit + 1, 0);
  spf[1] = 1;
  for (u64 i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<u32>(i);
      if (i <= limit / i)
        for (u64 j = i * i; j <= limit; j += i)
          if (spf[j] == 0) spf[j] = static_cast<u32>(i);
    }
  }
  return spf;
}

std::vector<u32> sieve_spf_segmented(u64 limit, u64 segment_size) {
  const u64 root = static_cast<u64>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<u32> base = sieve_spf_simple(root);
  std::vector<u64> base_primes;
  for (u64 p = 2; p <= root; ++p)
    if (base[p] == p) base_primes.push_back(p);

  std::vector<u32> spf(limit + 1, 0);
  spf[1] = 1;
  for (u64 lo = 2; lo <= limit; lo += segment_size) {
    const u64 hi = std::min(limit, lo + segment_size - 1);
    for (u64 p : base_primes) {
      if (p > hi / p) break;
      // Multiples c*p with c < p carry a smaller prime factor and are
      // handled by an earlier p, so starting at p^2 is enough.
      u64 start = std::max(p * p, (lo + p - 1) / p * p);
      for (u64 m = start; m <= hi; m += p)
        if (spf[m] == 0) spf[m] = static_cast<u32>(p);
    }
    for (u64 m = lo; m <= hi; ++m)
      if (spf[m] == 0) spf[m] = static_cast<u32>(m);
  }
  return spf;
}

}  // namespace detail

namespace {
constexpr u64 kSegmentedThreshold = u64{1} << 22;
}

PrimeTable build_prime_table(u64 limit, u64 max_limit) {
  if (limit < 2) throw invalid_input("build_prime_table: limit must be >= 2");
  if (limit > max_limit) throw invalid_input("build_prime_table: limit exceeds memory budget");
  if (limit > UINT32_MAX) throw invalid_input("build_prime_table: limit exceeds 32-bit spf storage");
  PrimeTable t;
  t.limit_ = limit;
  t.spf_ = limit <= kSegmentedThreshold ? detail::sieve_spf_simple(limit)
                                        : detail::sieve_spf_segmented(limit);
  return t;
}

u64 PrimeTable::prime_count(u64 X) const {
  if (X > limit_) throw invalid_input("PrimeTable::prime_count: X exceeds limit");
  u64 count = 0;
  for (u64 n = 2; n <= X; ++n)
    if (spf_[n] == n) ++count;
  return count;
}

std::vector<u64> PrimeTable::primes_in(u64 lo, u64 hi) const {
  hi = std::min(hi, limit_);
  std::vector<u64> out;
  for (u64 n = std::max<u64>(lo, 2); n <= hi; ++n)
    if (spf_[n] == n) out.push_back(n);
  return out;
}

Factorization factorize(u64 n, const PrimeTable& t) {
  if (n < 1 || n > t.limit()) throw invalid_input("factorize: n out of table range");
  Factorization f;
  f.n = n;
  while (n > 1) {
    const u64 p = t.spf(n);
    u32 e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  }
  return f;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> divs{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = divs.size();
    u64 pe = 1;
    for (u32 i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Real von_mangoldt(u64 n, const PrimeTable& t) {
  if (n < 1 || n > t.limit()) throw invalid_input("von_mangoldt: n out of table range");
  if (n == 1) return 0;
  const u64 p = t.spf(n);
  while (n % p == 0) n /= p;
  return n == 1 ? std::log(static_cast<Real>(p)) : Real{0};
}

int mobius(u64 n, const PrimeTable& t) {
  if (n < 1 || n > t.limit()) throw invalid_input("mobius: n out of table range");
  int sign = 1;
  while (n > 1) {
    const u64 p = t.spf(n);
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

u64 euler_phi(u64 n, const PrimeTable& t) {
  if (n < 1 || n > t.limit()) throw invalid_input("euler_phi: n out of table range");
  u64 phi = 1;
  while (n > 1) {
    const u64 p = t.spf(n);
    u64 pe = 1;
    while (n % p == 0) {
      n /= p;
      pe *= p;
    }
    phi *= pe - pe / p;
  }
  return phi;
}

bool is_smooth(u64 n, u64 bound) {
  if (n == 0) throw invalid_input("is_smooth: n must be positive");
  for (u64 p = 2; p <= bound && p * p <= n; ++p)
    while (n % p == 0) n /= p;
  return n == 1 || n <= bound;
}

bool is_smooth(u64 n, u64 bound, const PrimeTable& t) {
  if (n == 0) throw invalid_input("is_smooth: n must be positive");
  if (n > t.limit()) return is_smooth(n, bound);
  while (n > 1) {
    const u64 p = t.spf(n);
    if (p > bound) return false;
    n /= p;
  }
  return true;
}

Real chebyshev_psi(u64 X, const PrimeTable& t) {
  if (X > t.limit()) throw invalid_input("chebyshev_psi: X exceeds table limit");
  Real sum = 0;
  if (X < 2) return sum;
  t.for_each_prime(2, X, [&](u64 p) {
    const Real lp = std::log(static_cast<Real>(p));
    for (u64 q = p;;) {
      sum += lp;
      if (q > X / p) break;
      q *= p;
    }
  });
  return sum;
}

}  // namespace primegaps::arith
