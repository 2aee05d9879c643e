#pragma once

#include <utility>
#include <vector>

#include "primegaps/arith.hpp"
#include "primegaps/errors.hpp"
#include "primegaps/numeric.hpp"

namespace primegaps::selberg {

// Quadratic-form assembly is dense; reject sieving levels beyond desk scale.
constexpr u64 kMaxSievingLevel = 2000;

/// Selberg sieve weights: a sieving level D and real weights lambda_d on
/// squarefree d <= D with lambda_1 = 1 (zero elsewhere).
struct SieveWeightVector {
  u64 D = 1;
  std::vector<Real> lambda;  // dense, index d in [0, D]

  Real at(u64 d) const { return d <= D ? lambda[d] : Real{0}; }
  /// Squarefree d with a nonzero weight, ascending.
  std::vector<u64> support() const;
};

/// Builds a weight vector from (d, lambda_d) entries, validating that keys
/// are squarefree, within the level, and that lambda_1 = 1.
SieveWeightVector weights_from_values(u64 D, const std::vector<std::pair<u64, Real>>& entries,
                                      const arith::PrimeTable& t);

/// Q(lambda) = sum over d, d' of lambda_d lambda_d' / lcm(d, d'): the
/// coefficient of X in the majorant's interval average.
Real quadratic_form(const SieveWeightVector& w);

/// G(D) = sum over squarefree d <= D of mu^2(d) / phi(d). The minimum of the
/// quadratic form subject to lambda_1 = 1 equals 1/G(D).
Real g_sum(u64 D, const arith::PrimeTable& t);

/// Classical optimizer output: lambda_d = mu(d) (d/phi(d)) G_d(D/d) / G(D),
/// where G_d restricts the sum to d' coprime to d.
SieveWeightVector selberg_weights_closed_form(u64 D, const arith::PrimeTable& t);

/// Direct minimization of the quadratic form subject to lambda_1 = 1 via the
/// stationarity system on the squarefree support.
SieveWeightVector selberg_weights_linear_system(u64 D, const arith::PrimeTable& t);

/// Returns the minimizer, cross-checking the closed form against the linear
/// system to 1e-9 relative agreement on every entry.
SieveWeightVector optimal_selberg_weights(u64 D, const arith::PrimeTable& t);

/// nu(n) = (sum of lambda_d over d | n, d <= D)^2; equals 1 on primes above
/// the level.
Real majorant_value(u64 n, const SieveWeightVector& w);

struct IntervalMajorantReport {
  Real sum = 0;        // exact sum of nu(n) over [X0, X0 + X)
  Real main_term = 0;  // X * quadratic_form
  u64 pair_count = 0;  // |actual - main term| is at most this
};

/// Sums nu over [X0, X0 + X) exactly via lcm multiple-counts; each (d, d')
/// count differs from X/lcm by less than one, so the main term is off by at
/// most pair_count.
IntervalMajorantReport interval_majorant_sum(u64 X0, u64 X, const SieveWeightVector& w);

struct BrunTitchmarshReport {
  u64 X = 0;
  u64 D = 0;
  Real majorant_sum = 0;       // sum of nu over [0, X)
  Real two_x_over_log_x = 0;   // the factor-2 benchmark
  Real ratio = 0;              // majorant_sum / (X / log X)
  u64 pi_x = 0;
  u64 pi_d = 0;
};

/// The upper-bound experiment with optimal weights: the majorant sum always
/// dominates pi(X) - pi(D) and lands near twice X/log X.
BrunTitchmarshReport brun_titchmarsh_report(u64 X, u64 D, const arith::PrimeTable& t);

}  // namespace primegaps::selberg
