#include "primegaps/tuples.hpp"

#include <algorithm>

namespace primegaps::tuples {

namespace {

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p <= n; ++p) {
    bool prime = true;
    for (u64 d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(p);
  }
  return out;
}

u64 residue(i64 h, u64 p) {
  i64 r = h % static_cast<i64>(p);
  if (r < 0) r += static_cast<i64>(p);
  return static_cast<u64>(r);
}

}  // namespace

KTuple::KTuple(std::vector<i64> offsets) : offsets_(std::move(offsets)) {
  if (offsets_.empty()) throw invalid_input("KTuple: offsets must be nonempty");
  std::sort(offsets_.begin(), offsets_.end());
  if (std::adjacent_find(offsets_.begin(), offsets_.end()) != offsets_.end())
    throw invalid_input("KTuple: offsets must be distinct");
}

KTuple KTuple::shifted(i64 c) const {
  std::vector<i64> shifted(offsets_);
  for (auto& h : shifted) h += c;
  return KTuple(std::move(shifted));
}

Admissibility is_admissible(const KTuple& t) {
  const auto& hs = t.offsets();
  for (u64 p : primes_up_to(t.k())) {
    std::vector<char> hit(p, 0);
    u64 covered = 0;
    for (i64 h : hs) {
      auto& slot = hit[residue(h, p)];
      if (!slot) {
        slot = 1;
        ++covered;
      }
    }
    if (covered == p) return {false, p};
  }
  return {true, std::nullopt};
}

i64 diameter(const KTuple& t) { return t.diameter(); }

KTuple tuple_from_primes(std::size_t k, const arith::PrimeTable& t, u64 start) {
  if (k == 0) throw invalid_input("tuple_from_primes: k must be >= 1");
  if (start == 0) start = k + 1;
  if (start <= k) throw invalid_input("tuple_from_primes: start must exceed k");
  std::vector<i64> offsets;
  i64 first = 0;
  for (u64 n = start + 1; n <= t.limit() && offsets.size() < k; ++n) {
    if (!t.is_prime(n)) continue;
    if (offsets.empty()) first = static_cast<i64>(n);
    offsets.push_back(static_cast<i64>(n) - first);
  }
  if (offsets.size() < k)
    throw invalid_input("tuple_from_primes: table too small to collect k primes");
  return KTuple(std::move(offsets));
}

namespace {

bool admissible_offsets(const std::vector<i64>& hs, const std::vector<u64>& primes) {
  for (u64 p : primes) {
    std::vector<char> hit(p, 0);
    u64 covered = 0;
    for (i64 h : hs) {
      auto& slot = hit[residue(h, p)];
      if (!slot) {
        slot = 1;
        ++covered;
      }
    }
    if (covered == p) return false;
  }
  return true;
}

// Depth-first placement of the middle offsets for a fixed diameter; offsets
// run 0 = h_1 < ... < h_k = diam. Returns the first admissible hit, which is
// lexicographically smallest by construction.
bool search_fixed_diameter(std::size_t k, i64 diam, std::vector<i64>& chosen,
                           const std::vector<u64>& primes) {
  if (chosen.size() == k - 1) {
    chosen.push_back(diam);
    const bool ok = admissible_offsets(chosen, primes);
    if (!ok) chosen.pop_back();
    return ok;
  }
  const i64 remaining = static_cast<i64>(k - 1 - chosen.size());
  for (i64 h = chosen.back() + 1; h + remaining <= diam; ++h) {
    chosen.push_back(h);
    if (search_fixed_diameter(k, diam, chosen, primes)) return true;
    chosen.pop_back();
  }
  return false;
}

KTuple narrowest_exhaustive(std::size_t k, const std::vector<u64>& primes) {
  if (k == 1) return KTuple({0});
  for (i64 diam = static_cast<i64>(k) - 1;; ++diam) {
    std::vector<i64> chosen{0};
    if (search_fixed_diameter(k, diam, chosen, primes)) return KTuple(std::move(chosen));
  }
}

// Sieve heuristic: start from [0, L], delete for each prime p <= k the
// residue class with the fewest survivors, then bisect L down to the
// smallest length still leaving k survivors.
std::optional<std::vector<i64>> greedy_survivors(std::size_t k, i64 L,
                                                 const std::vector<u64>& primes) {
  std::vector<char> alive(static_cast<std::size_t>(L) + 1, 1);
  for (u64 p : primes) {
    std::vector<u64> count(p, 0);
    for (i64 i = 0; i <= L; ++i)
      if (alive[static_cast<std::size_t>(i)]) ++count[static_cast<u64>(i) % p];
    u64 best = 0;
    for (u64 r = 1; r < p; ++r)
      if (count[r] < count[best]) best = r;
    for (i64 i = static_cast<i64>(best); i <= L; i += static_cast<i64>(p))
      alive[static_cast<std::size_t>(i)] = 0;
  }
  std::vector<i64> survivors;
  for (i64 i = 0; i <= L; ++i)
    if (alive[static_cast<std::size_t>(i)]) {
      survivors.push_back(i);
      if (survivors.size() == k) break;
    }
  if (survivors.size() < k) return std::nullopt;
  return survivors;
}

KTuple narrowest_greedy(std::size_t k, const std::vector<u64>& primes) {
  if (k == 1) return KTuple({0});
  i64 lo = static_cast<i64>(k) - 1;
  i64 hi = lo;
  while (!greedy_survivors(k, hi, primes)) hi *= 2;
  while (lo < hi) {
    const i64 mid = lo + (hi - lo) / 2;
    if (greedy_survivors(k, mid, primes))
      hi = mid;
    else
      lo = mid + 1;
  }
  auto survivors = greedy_survivors(k, hi, primes);
  const i64 base = survivors->front();
  for (auto& h : *survivors) h -= base;
  return KTuple(std::move(*survivors));
}

}  // namespace

KTuple narrowest_tuple(std::size_t k, SearchMethod method, NarrowestOptions opts) {
  if (k == 0) throw invalid_input("narrowest_tuple: k must be >= 1");
  const auto primes = primes_up_to(k);
  switch (method) {
    case SearchMethod::exhaustive:
      if (k > opts.exhaustive_max_k)
        throw invalid_input("narrowest_tuple: k too large for exhaustive search");
      return narrowest_exhaustive(k, primes);
    case SearchMethod::greedy:
      return narrowest_greedy(k, primes);
  }
  throw invalid_input("narrowest_tuple: unknown method");
}

}  // namespace primegaps::tuples
