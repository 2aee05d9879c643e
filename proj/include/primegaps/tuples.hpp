#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "primegaps/arith.hpp"
#include "primegaps/errors.hpp"
#include "primegaps/numeric.hpp"

namespace primegaps::tuples {

/// A k-tuple of strictly increasing integer offsets h_1 < ... < h_k.
class KTuple {
 public:
  KTuple() = default;

  /// Sorts the offsets; rejects empty input and duplicates.
  explicit KTuple(std::vector<i64> offsets);

  std::size_t k() const { return offsets_.size(); }
  i64 diameter() const { return offsets_.back() - offsets_.front(); }
  const std::vector<i64>& offsets() const { return offsets_; }

  KTuple shifted(i64 c) const;
  /// Canonical form with h_1 = 0.
  KTuple normalized() const { return shifted(-offsets_.front()); }

  bool operator==(const KTuple&) const = default;

 private:
  std::vector<i64> offsets_;
};

struct Admissibility {
  bool admissible = false;
  // Smallest prime whose residue classes the tuple covers completely;
  // present exactly when inadmissible.
  std::optional<u64> witness;
};

/// A tuple is admissible iff for every prime p it omits a residue class
/// mod p. Only p <= k can be covered by k values, so only those are tested.
Admissibility is_admissible(const KTuple& t);

i64 diameter(const KTuple& t);

/// Normalized tuple of the first k primes above `start` (default start is
/// k + 1, the least start that guarantees admissibility).
KTuple tuple_from_primes(std::size_t k, const arith::PrimeTable& t, u64 start = 0);

enum class SearchMethod { exhaustive, greedy };

struct NarrowestOptions {
  std::size_t exhaustive_max_k = 8;
};

/// Exhaustive: provably minimal diameter (search over all placements,
/// increasing the diameter until a hit). Greedy: a sieve heuristic whose
/// diameter is reported but not claimed minimal.
KTuple narrowest_tuple(std::size_t k, SearchMethod method, NarrowestOptions opts = {});

}  // namespace primegaps::tuples
