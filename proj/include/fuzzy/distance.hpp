#pragma once

// Spectral distances on the fuzzy sphere that have closed forms, together with
// the diagonal-subalgebra linear program.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "fuzzy/states.hpp"

namespace fuzzy {

enum class DistanceMethod { closed_form, numerical, interval };

inline const char* to_string(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::closed_form: return "closed_form";
    case DistanceMethod::numerical: return "numerical";
    case DistanceMethod::interval: return "interval";
  }
  return "unknown";
}

/// Bookkeeping from the numerical maximiser.
struct SolverDiagnostics {
  bool converged = false;          // best restart ended on a convergence criterion
  int restarts = 0;
  int converged_restarts = 0;
  int best_restart = -1;
  long iterations = 0;             // summed over restarts and annealing stages
  double achieved_tolerance = 0;   // relative change over the last annealing stage of the best restart
  double certificate_residual = 0; // | ||[D, a*]|| - 1 |
};

struct DistanceResult {
  double value = 0.0;
  DistanceMethod method = DistanceMethod::closed_form;
  std::optional<double> lower;
  std::optional<double> upper;
  /// Hermitian a* with ||[D_N, a*]|| = 1 and Tr((rho - rho') a*) = value.
  std::optional<ComplexMatrix> certificate;
  std::optional<SolverDiagnostics> diagnostics;
  /// A second number reported alongside the value (the diagonal LP carries
  /// rho_N(theta - theta') here).
  std::optional<double> reference;
};

namespace detail {

inline void check_theta(double theta, const char* where) {
  if (!(theta >= -1e-12 && theta <= std::numbers::pi + 1e-12))
    throw OutOfRange(std::string(where) + ": theta must lie in [0, pi]");
}

inline double clamp_theta(double theta) { return std::clamp(theta, 0.0, std::numbers::pi); }

/// 1 / sqrt(K (N - K + 1)), the chain step between |j, K-j-1> and |j, K-j>.
inline double chain_step(int N, int K) { return 1.0 / std::sqrt(static_cast<double>(K) * (N - K + 1)); }

}  // namespace detail

/// Binomial(N, q) probabilities for n = 0..N, evaluated in the log domain.
inline std::vector<double> binomial_pmf(int N, double q) {
  std::vector<double> p(static_cast<std::size_t>(N) + 1, 0.0);
  if (q <= 0.0) {
    p.front() = 1.0;
    return p;
  }
  if (q >= 1.0) {
    p.back() = 1.0;
    return p;
  }
  const double lq = std::log(q), lr = std::log1p(-q), lgn = std::lgamma(N + 1.0);
  for (int n = 0; n <= N; ++n)
    p[static_cast<std::size_t>(n)] =
        std::exp(lgn - std::lgamma(n + 1.0) - std::lgamma(N - n + 1.0) + n * lq + (N - n) * lr);
  return p;
}

/// Squared moduli of the coherent coefficients of |phi,theta>, indexed by j + m.
inline std::vector<double> coherent_weights(int N, double theta) {
  const double s = std::sin(0.5 * theta);
  return binomial_pmf(N, s * s);
}

/// d_1(omega_x, omega_y) = |x - y| / 2.
inline DistanceResult d1_ball(const Eigen::Vector3d& x, const Eigen::Vector3d& y) {
  if (x.norm() > 1.0 + Tolerances::ball || y.norm() > 1.0 + Tolerances::ball)
    throw ContractViolation("d1_ball: vector outside the closed unit ball");
  return {0.5 * (x - y).norm(), DistanceMethod::closed_form};
}

/// d_N(omega_m, omega_n) = sum_{k=m+1}^{n} 1 / sqrt((j+k)(j-k+1)); symmetric in m, n.
inline DistanceResult basis_chain(const SpinLabel& spin, HalfInt m, HalfInt n) {
  const Eigen::Index lo = std::min(spin.index(m), spin.index(n));
  const Eigen::Index hi = std::max(spin.index(m), spin.index(n));
  double sum = 0.0;
  for (Eigen::Index K = lo + 1; K <= hi; ++K) sum += detail::chain_step(spin.N(), static_cast<int>(K));
  return {sum, DistanceMethod::closed_form};
}

/// Distance between the poles, sum_{k=1}^{N} 1 / sqrt(k (N - k + 1)).
inline DistanceResult diameter(const SpinLabel& spin) {
  double sum = 0.0;
  for (int k = 1; k <= spin.N(); ++k) sum += detail::chain_step(spin.N(), k);
  return {sum, DistanceMethod::closed_form};
}

/// rho_N(theta) = sum_n binom(N,n) s^{2n} c^{2(N-n)} sum_{k<=n} 1/sqrt(k(N-k+1)),
/// s = sin(theta/2), c = cos(theta/2).
inline DistanceResult rho_closed(const SpinLabel& spin, double theta) {
  detail::check_theta(theta, "rho_closed");
  const int N = spin.N();
  const std::vector<double> p = coherent_weights(N, detail::clamp_theta(theta));
  double prefix = 0.0, sum = 0.0;
  for (int n = 1; n <= N; ++n) {
    prefix += detail::chain_step(N, n);
    sum += p[static_cast<std::size_t>(n)] * prefix;
  }
  return {sum, DistanceMethod::closed_form};
}

/// rho'_N(theta) = sum_{n=0}^{N-1} sqrt(binom(N,n) binom(N,n+1)) s^{2n+1} c^{2N-2n-1}.
inline double rho_derivative(const SpinLabel& spin, double theta) {
  detail::check_theta(theta, "rho_derivative");
  theta = detail::clamp_theta(theta);
  const int N = spin.N();
  const double s = std::sin(0.5 * theta), c = std::cos(0.5 * theta);
  if (s == 0.0 || c <= 0.0) return 0.0;
  const double ls = std::log(s), lc = std::log(c), lgn = std::lgamma(N + 1.0);
  double sum = 0.0;
  for (int n = 0; n < N; ++n) {
    const double log_binoms = lgn - std::lgamma(n + 1.0) - std::lgamma(N - n + 1.0) + lgn -
                              std::lgamma(n + 2.0) - std::lgamma(N - n);
    sum += std::exp(0.5 * log_binoms + (2 * n + 1) * ls + (2 * N - 2 * n - 1) * lc);
  }
  return sum;
}

/// Diagonal element with entries -sum_{k=-j+1}^{m} 1/sqrt((j+k)(j-k+1)); it
/// satisfies [E, a]|j,m> = |j,m+1> and ||[D_N, a]|| = 1.
inline ComplexMatrix hat_a(const SpinLabel& spin) {
  ComplexMatrix a = ComplexMatrix::Zero(spin.dim(), spin.dim());
  double acc = 0.0;
  for (Eigen::Index i = 1; i < spin.dim(); ++i) {
    acc += detail::chain_step(spin.N(), static_cast<int>(i));
    a(i, i) = -acc;
  }
  return a;
}

/// sup |psi_(0,theta)(a) - psi_(0,theta')(a)| over real diagonal a with
/// ||[D_N, a]|| <= 1. For diagonal hermitian a the seminorm is
/// max_k |c_{k+1} - c_k| sqrt((k+1)(N-k)), so the problem is a linear program
/// in the increments, solved by saturating each increment in the direction of
/// the tail-probability difference.
inline DistanceResult connes_numeric_diagonal(const SpinLabel& spin, double theta, double theta_prime) {
  detail::check_theta(theta, "connes_numeric_diagonal");
  detail::check_theta(theta_prime, "connes_numeric_diagonal");
  if (theta_prime > theta + 1e-15)
    throw OutOfRange("connes_numeric_diagonal: requires theta' <= theta");
  const int N = spin.N();
  const std::vector<double> p = coherent_weights(N, detail::clamp_theta(theta));
  const std::vector<double> q = coherent_weights(N, detail::clamp_theta(theta_prime));

  ComplexMatrix cert = ComplexMatrix::Zero(spin.dim(), spin.dim());
  double tail = 0.0, value = 0.0, level = 0.0;
  std::vector<double> tails(static_cast<std::size_t>(N), 0.0);
  for (int k = N - 1; k >= 0; --k) {
    tail += p[static_cast<std::size_t>(k) + 1] - q[static_cast<std::size_t>(k) + 1];
    tails[static_cast<std::size_t>(k)] = tail;
  }
  for (int k = 0; k < N; ++k) {
    const double w = detail::chain_step(N, k + 1);
    const double t = tails[static_cast<std::size_t>(k)];
    value += std::abs(t) * w;
    level += (t >= 0.0 ? w : -w);
    cert(k + 1, k + 1) = level;
  }
  DistanceResult r{value, DistanceMethod::numerical};
  r.certificate = cert;
  r.reference = rho_closed(spin, detail::clamp_theta(theta - theta_prime)).value;
  return r;
}

}  // namespace fuzzy
