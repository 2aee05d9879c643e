#include "primegaps/selberg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace primegaps::selberg {

namespace {

void check_level(u64 D) {
  if (D < 1) throw invalid_input("sieving level must be >= 1");
  if (D > kMaxSievingLevel) throw invalid_input("sieving level exceeds dense-assembly bound");
}

std::vector<u64> squarefree_up_to(u64 D, const arith::PrimeTable& t) {
  std::vector<u64> out;
  for (u64 d = 1; d <= D; ++d)
    if (arith::mobius(d, t) != 0) out.push_back(d);
  return out;
}

}  // namespace

std::vector<u64> SieveWeightVector::support() const {
  std::vector<u64> out;
  for (u64 d = 1; d <= D; ++d)
    if (lambda[d] != 0) out.push_back(d);
  return out;
}

SieveWeightVector weights_from_values(u64 D, const std::vector<std::pair<u64, Real>>& entries,
                                      const arith::PrimeTable& t) {
  check_level(D);
  SieveWeightVector w;
  w.D = D;
  w.lambda.assign(D + 1, 0);
  for (const auto& [d, v] : entries) {
    if (d < 1 || d > D) throw invalid_input("weight key outside [1, D]");
    if (arith::mobius(d, t) == 0) throw invalid_input("weight key must be squarefree");
    w.lambda[d] = v;
  }
  if (w.lambda[1] != 1) throw invalid_input("lambda_1 must equal 1");
  return w;
}

Real quadratic_form(const SieveWeightVector& w) {
  const auto supp = w.support();
  Real q = 0;
  for (u64 a : supp)
    for (u64 b : supp) {
      const u64 l = a / std::gcd(a, b) * b;
      q += w.lambda[a] * w.lambda[b] / static_cast<Real>(l);
    }
  return q;
}

Real g_sum(u64 D, const arith::PrimeTable& t) {
  check_level(D);
  Real g = 0;
  for (u64 d = 1; d <= D; ++d)
    if (arith::mobius(d, t) != 0) g += Real{1} / static_cast<Real>(arith::euler_phi(d, t));
  return g;
}

SieveWeightVector selberg_weights_closed_form(u64 D, const arith::PrimeTable& t) {
  check_level(D);
  SieveWeightVector w;
  w.D = D;
  w.lambda.assign(D + 1, 0);
  const Real G = g_sum(D, t);
  for (u64 d = 1; d <= D; ++d) {
    const int mu = arith::mobius(d, t);
    if (mu == 0) continue;
    // G_d(D/d): squarefree d' <= D/d coprime to d, summing mu^2/phi.
    Real Gd = 0;
    const u64 z = D / d;
    for (u64 dp = 1; dp <= z; ++dp) {
      if (std::gcd(dp, d) != 1) continue;
      if (arith::mobius(dp, t) == 0) continue;
      Gd += Real{1} / static_cast<Real>(arith::euler_phi(dp, t));
    }
    const Real ratio = static_cast<Real>(d) / static_cast<Real>(arith::euler_phi(d, t));
    w.lambda[d] = static_cast<Real>(mu) * ratio * Gd / G;
  }
  return w;
}

SieveWeightVector selberg_weights_linear_system(u64 D, const arith::PrimeTable& t) {
  check_level(D);
  const auto supp = squarefree_up_to(D, t);  // supp[0] == 1
  const std::size_t m = supp.size() - 1;     // free variables (d >= 2)

  SieveWeightVector w;
  w.D = D;
  w.lambda.assign(D + 1, 0);
  w.lambda[1] = 1;
  if (m == 0) return w;

  using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
  Mat C(m, m);
  Vec b(m);
  for (std::size_t i = 0; i < m; ++i) {
    const u64 di = supp[i + 1];
    b(static_cast<Eigen::Index>(i)) = Real{1} / static_cast<Real>(di);  // lcm(1, di) = di
    for (std::size_t j = 0; j < m; ++j) {
      const u64 dj = supp[j + 1];
      const u64 l = di / std::gcd(di, dj) * dj;
      C(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          Real{1} / static_cast<Real>(l);
    }
  }
  Vec x = C.ldlt().solve(-b);
  for (std::size_t i = 0; i < m; ++i) w.lambda[supp[i + 1]] = x(static_cast<Eigen::Index>(i));
  return w;
}

SieveWeightVector optimal_selberg_weights(u64 D, const arith::PrimeTable& t) {
  auto closed = selberg_weights_closed_form(D, t);
  auto solved = selberg_weights_linear_system(D, t);
  for (u64 d = 1; d <= D; ++d) {
    const Real a = closed.lambda[d], b = solved.lambda[d];
    const Real scale = std::max<Real>({std::fabs(a), std::fabs(b), 1});
    if (std::fabs(a - b) > 1e-9L * scale)
      throw std::runtime_error("selberg weight routes disagree beyond 1e-9");
  }
  return closed;
}

Real majorant_value(u64 n, const SieveWeightVector& w) {
  if (n < 1) throw invalid_input("majorant_value: n must be positive");
  Real s = 0;
  for (u64 d = 1; d <= w.D; ++d)
    if (w.lambda[d] != 0 && n % d == 0) s += w.lambda[d];
  return s * s;
}

IntervalMajorantReport interval_majorant_sum(u64 X0, u64 X, const SieveWeightVector& w) {
  const auto supp = w.support();
  IntervalMajorantReport r;
  r.pair_count = supp.size() * supp.size();
  for (u64 a : supp)
    for (u64 b : supp) {
      const u64 l = a / std::gcd(a, b) * b;
      r.sum += w.lambda[a] * w.lambda[b] *
               static_cast<Real>(count_multiples(l, X0, X0 + X));
    }
  r.main_term = static_cast<Real>(X) * quadratic_form(w);
  return r;
}

BrunTitchmarshReport brun_titchmarsh_report(u64 X, u64 D, const arith::PrimeTable& t) {
  if (X > t.limit()) throw invalid_input("brun_titchmarsh_report: X exceeds table limit");
  if (D >= X) throw invalid_input("brun_titchmarsh_report: D must be below X");
  const auto w = optimal_selberg_weights(D, t);
  BrunTitchmarshReport r;
  r.X = X;
  r.D = D;
  r.majorant_sum = interval_majorant_sum(0, X, w).sum;
  const Real logX = std::log(static_cast<Real>(X));
  r.two_x_over_log_x = 2 * static_cast<Real>(X) / logX;
  r.ratio = r.majorant_sum / (static_cast<Real>(X) / logX);
  r.pi_x = t.prime_count(X);
  r.pi_d = t.prime_count(D);
  return r;
}

}  // namespace primegaps::selberg
