#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "primegaps/arith.hpp"

using namespace primegaps;
using namespace primegaps::arith;

namespace {

// Oracle: trial-division primality, independent of the sieve.
bool oracle_is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Oracle: classic boolean Eratosthenes, no spf machinery.
std::vector<bool> oracle_prime_flags(u64 limit) {
  std::vector<bool> flags(limit + 1, true);
  flags[0] = false;
  if (limit >= 1) flags[1] = false;
  for (u64 i = 2; i * i <= limit; ++i)
    if (flags[i])
      for (u64 j = i * i; j <= limit; j += i) flags[j] = false;
  return flags;
}

// Oracle: full factorization by trial division.
std::vector<std::pair<u64, u32>> oracle_factor(u64 n) {
  std::vector<std::pair<u64, u32>> f;
  for (u64 p = 2; p * p <= n; ++p) {
    u32 e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

const PrimeTable& table_1e6() {
  static PrimeTable t = build_prime_table(1'000'000);
  return t;
}

}  // namespace

TEST_CASE("prime table invariants against trial division") {
  auto t = build_prime_table(10'000);
  for (u64 n = 0; n <= 100; ++n) CHECK(t.is_prime(n) == oracle_is_prime(n));
  for (u64 n = 2; n <= 10'000; ++n) {
    const u64 p = t.spf(n);
    CHECK(n % p == 0);
    CHECK(oracle_is_prime(p));
    CHECK(t.is_prime(n) == (p == n));
  }
}

TEST_CASE("small prime enumeration") {
  auto t = build_prime_table(10);
  CHECK(t.primes_in(0, 10) == std::vector<u64>{2, 3, 5, 7});
  CHECK(t.spf(12 - 2) == 2);  // spf(10)
  auto t2 = build_prime_table(100);
  CHECK(t2.spf(12) == 2);
  CHECK(t2.spf(35) == 5);
}

TEST_CASE("pi(10^6) = 78498 against independent sieve oracle") {
  const auto& t = table_1e6();
  auto flags = oracle_prime_flags(1'000'000);
  u64 oracle_count = 0;
  for (u64 n = 0; n < flags.size(); ++n)
    if (flags[n]) ++oracle_count;
  CHECK(oracle_count == 78498);
  CHECK(t.prime_count(1'000'000) == 78498);
}

TEST_CASE("pi matches brute-force counts at 10^2..10^4") {
  const auto& t = table_1e6();
  for (u64 X : {100ull, 1000ull, 10000ull}) {
    u64 brute = 0;
    for (u64 n = 2; n <= X; ++n)
      if (oracle_is_prime(n)) ++brute;
    CHECK(t.prime_count(X) == brute);
  }
}

TEST_CASE("segmented and simple sieves agree") {
  const u64 limit = 300'000;
  auto a = detail::sieve_spf_simple(limit);
  auto b = detail::sieve_spf_segmented(limit, 1 << 12);
  CHECK(a == b);
}

TEST_CASE("build_prime_table rejects bad limits") {
  CHECK_THROWS_AS(build_prime_table(1), invalid_input);
  CHECK_THROWS_AS(build_prime_table(10'000, 100), invalid_input);
}

TEST_CASE("von Mangoldt values") {
  const auto& t = table_1e6();
  CHECK(von_mangoldt(8, t) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(von_mangoldt(1, t) == 0);
  CHECK(von_mangoldt(6, t) == 0);
  CHECK(von_mangoldt(7, t) == doctest::Approx(std::log(7.0)).epsilon(1e-15));
  CHECK(von_mangoldt(243, t) == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK_THROWS_AS(von_mangoldt(0, t), invalid_input);
  CHECK_THROWS_AS(von_mangoldt(t.limit() + 1, t), invalid_input);
}

TEST_CASE("Lambda positive exactly on prime powers up to 10^5") {
  const auto& t = table_1e6();
  for (u64 n = 1; n <= 100'000; ++n) {
    const bool positive = von_mangoldt(n, t) > 0;
    auto f = oracle_factor(n);
    const bool prime_power = f.size() == 1;
    CHECK(positive == prime_power);
  }
}

TEST_CASE("psi(10^6) within 0.5% of 10^6, against direct-sum oracle") {
  const auto& t = table_1e6();
  // Oracle: term-by-term summation of Lambda over every n.
  Real direct = 0;
  for (u64 n = 1; n <= 1'000'000; ++n) direct += von_mangoldt(n, t);
  const Real fast = chebyshev_psi(1'000'000, t);
  CHECK(std::abs(static_cast<double>(fast - direct)) < 1e-6);
  CHECK(std::abs(static_cast<double>(fast) - 1e6) < 0.005 * 1e6);
}

TEST_CASE("psi hand values") {
  const auto& t = table_1e6();
  CHECK(chebyshev_psi(1, t) == 0);
  const Real expected = 3 * std::log(Real{2}) + 2 * std::log(Real{3}) +
                        std::log(Real{5}) + std::log(Real{7});
  CHECK(chebyshev_psi(10, t) == doctest::Approx(static_cast<double>(expected)).epsilon(1e-15));
}

TEST_CASE("mobius and phi") {
  const auto& t = table_1e6();
  CHECK(mobius(1, t) == 1);
  CHECK(mobius(12, t) == 0);
  CHECK(mobius(30, t) == -1);
  CHECK(euler_phi(1, t) == 1);
  for (u64 p : {2ull, 3ull, 97ull, 9973ull}) CHECK(euler_phi(p, t) == p - 1);
}

TEST_CASE("sum of phi over divisors equals n, n <= 10^4") {
  const auto& t = table_1e6();
  for (u64 n = 1; n <= 10'000; ++n) {
    u64 s = 0;
    for (u64 d = 1; d <= n; ++d)
      if (n % d == 0) s += euler_phi(d, t);
    CHECK(s == n);
  }
}

TEST_CASE("multiplicativity on random coprime pairs") {
  const auto& t = table_1e6();
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<u64> pick(1, 900);
  int done = 0;
  while (done < 10'000) {
    const u64 m = pick(rng), n = pick(rng);
    if (std::gcd(m, n) != 1) continue;
    CHECK(euler_phi(m * n, t) == euler_phi(m, t) * euler_phi(n, t));
    CHECK(mobius(m * n, t) == mobius(m, t) * mobius(n, t));
    ++done;
  }
}

TEST_CASE("smoothness") {
  const auto& t = table_1e6();
  CHECK(is_smooth(60, 5));
  CHECK_FALSE(is_smooth(14, 5));
  CHECK(is_smooth(1, 2));
  CHECK(is_smooth(1, 1));
  // count of 10-smooth n <= 10^4 against a full-factorization oracle
  u64 fast_count = 0, oracle_count = 0;
  for (u64 n = 1; n <= 10'000; ++n) {
    if (is_smooth(n, 10, t)) ++fast_count;
    auto f = oracle_factor(n);
    bool smooth = true;
    for (auto& [p, e] : f)
      if (p > 10) smooth = false;
    if (smooth) ++oracle_count;
    CHECK(is_smooth(n, 10) == smooth);
  }
  CHECK(fast_count == oracle_count);
}

TEST_CASE("factorize and divisors") {
  const auto& t = table_1e6();
  auto f = factorize(360, t);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == std::pair<u64, u32>{2, 3});
  CHECK(f.factors[1] == std::pair<u64, u32>{3, 2});
  CHECK(f.factors[2] == std::pair<u64, u32>{5, 1});
  auto divs = divisors(f);
  CHECK(divs.size() == 24);
  CHECK(divs.front() == 1);
  CHECK(divs.back() == 360);
  // reconstruction invariant on a sample
  for (u64 n = 1; n <= 2000; ++n) {
    auto g = factorize(n, t);
    u64 prod = 1;
    u64 last = 1;
    for (auto& [p, e] : g.factors) {
      CHECK(p > last);
      last = p;
      for (u32 i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}
