#pragma once

// Property suites shared by the CLI `verify` command and the acceptance binary.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fuzzy/solver.hpp"

namespace fuzzy {

struct Check {
  std::string suite;
  std::string name;
  int N = 0;
  double residual = 0.0;   // nonnegative; compared against tolerance
  double tolerance = 0.0;
  bool informational = false;  // recorded, never fails the suite
  bool passed() const { return informational || residual <= tolerance; }
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed(); }));
  }
};

/// Solver precision envelope for comparisons between two numerical runs.
inline constexpr double kSolverEnvelope = 5e-3;
/// Slack on the geodesic upper bound in the sandwich.
inline constexpr double kSandwichSlack = 2e-3;
/// Numerical suites stop at this level regardless of --max-N.
inline constexpr int kNumericSuiteCap = 4;

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline BlochPoint random_point(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  return BlochPoint::normalized(ang(rng), std::acos(u(rng)));
}

inline Rotation random_rotation(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  return {ang(rng), std::acos(u(rng)), ang(rng)};
}

/// Coherent pairs used by the numerical suites; the first pair is fixed.
inline std::vector<std::pair<BlochPoint, BlochPoint>> sample_pairs(std::uint64_t seed, int count) {
  std::vector<std::pair<BlochPoint, BlochPoint>> out{{{0.0, std::numbers::pi / 2}, {0.0, 0.0}}};
  Rng rng(derive_seed(seed, 1000));
  while (static_cast<int>(out.size()) < count) {
    const BlochPoint p = random_point(rng);
    out.push_back({p, random_point(rng)});
  }
  return out;
}

inline SolverConfig suite_config(std::uint64_t seed) {
  SolverConfig cfg;
  cfg.seed = seed;
  return cfg;
}

}  // namespace detail

/// Irreducible spectra for N = 1..max_N and full spectra for N = 1..min(max_N, 6).
inline SuiteReport verify_spectra(int max_N) {
  detail::Stopwatch sw;
  SuiteReport rep{"spectra", {}, 0.0};
  for (int N = 1; N <= max_N; ++N) {
    const SpinLabel spin(N);
    const RealVector ev = build_irreducible(spin).eigen().eigenvalues;
    rep.checks.push_back({rep.suite, "irreducible spectrum", N,
                          spectrum_deviation(ev, predicted_spectrum(DiracKind::irreducible, spin)), 1e-9});
  }
  for (int N = 1; N <= std::min(max_N, 6); ++N) {
    const SpinLabel spin(N);
    const RealVector ev = build_full(spin).eigen().eigenvalues;
    const auto predicted = predicted_spectrum(DiracKind::full, spin);
    rep.checks.push_back({rep.suite, "full spectrum", N, spectrum_deviation(ev, predicted), 1e-9});
    rep.checks.push_back({rep.suite, "full spectrum by sectors", N,
                          spectrum_deviation(full_spectrum_by_sectors(spin), predicted), 1e-9});
  }
  rep.seconds = sw.seconds();
  return rep;
}

/// ||[D~_N, a]|| against ||[D_N, a]|| on `samples` random hermitian a per level.
inline SuiteReport verify_metric_equivalence(int max_N, std::uint64_t seed, int samples = 100) {
  detail::Stopwatch sw;
  SuiteReport rep{"metric-equivalence", {}, 0.0};
  for (int N = 1; N <= std::min(max_N, kFullMaterializeCap); ++N) {
    const SpinLabel spin(N);
    const DiracOperator full = build_full(spin);
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(N)));
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
      const ComplexMatrix a = random_hermitian(spin.dim(), rng);
      worst = std::max(worst, std::abs(full_commutator_seminorm_explicit(full, a) - commutator_seminorm(spin, a)));
    }
    rep.checks.push_back({rep.suite, "full and irreducible seminorms agree", N, worst, 1e-10});
  }
  rep.seconds = sw.seconds();
  return rep;
}

/// Sandwich rho_N(gamma) <= d_N <= gamma, certificate validity, the arcsin
/// bound and the uniform deficit bound.
inline SuiteReport verify_inequalities(int max_N, std::uint64_t seed, int pairs = 4) {
  detail::Stopwatch sw;
  SuiteReport rep{"inequalities", {}, 0.0};
  const SolverConfig cfg = detail::suite_config(seed);
  const auto sample = detail::sample_pairs(seed, pairs);
  for (int N = 2; N <= std::min(max_N, kNumericSuiteCap); ++N) {
    const SpinLabel spin(N);
    double below = 0.0, above = 0.0, cert_norm = 0.0, cert_value = 0.0;
    for (const auto& [p, q] : sample) {
      const double gamma = geodesic_distance(p, q);
      const DistanceResult r = connes_numeric(spin, coherent_state(spin, p), coherent_state(spin, q), cfg);
      below = std::max(below, rho_closed(spin, gamma).value - r.value);
      above = std::max(above, r.value - gamma);
      cert_norm = std::max(cert_norm, r.diagnostics->certificate_residual);
      const ComplexMatrix delta = coherent_state(spin, p).density() - coherent_state(spin, q).density();
      cert_value = std::max(cert_value, std::abs((delta * *r.certificate).trace().real() - r.value));
    }
    rep.checks.push_back({rep.suite, "rho_N(gamma) <= numeric", N, std::max(0.0, below), 1e-9});
    rep.checks.push_back({rep.suite, "numeric <= geodesic + slack", N, std::max(0.0, above), kSandwichSlack});
    rep.checks.push_back({rep.suite, "certificate seminorm is 1", N, cert_norm, 1e-8});
    rep.checks.push_back({rep.suite, "certificate reproduces value", N, cert_value, 1e-8});
  }

  const int top = std::max(max_N, 501);
  double odd = 0.0, even = 0.0;
  for (int N = 1; N <= top; ++N) {
    const double gap = std::max(0.0, arcsin_bound(N) - diameter(SpinLabel(N)).value);
    double& slot = N % 2 == 1 ? odd : even;
    slot = std::max(slot, gap);
  }
  rep.checks.push_back({rep.suite, "arcsin bound <= diameter, odd N <= " + std::to_string(top), 0, odd, 0.0});
  Check even_check{rep.suite, "arcsin bound <= diameter, even N <= " + std::to_string(top), 0, even, 0.0};
  even_check.informational = true;
  rep.checks.push_back(even_check);

  for (int N = 1; N <= 30; ++N) {
    const SpinLabel spin(N);
    double over = 0.0, excess = 0.0, deriv = 0.0;
    const double bound = uniform_deficit(N);
    for (int i = 0; i < 64; ++i) {
      const double theta = sweep_theta(i, 64);
      const double rho = rho_closed(spin, theta).value;
      over = std::max(over, rho - theta);
      excess = std::max(excess, (theta - rho) - bound);
      const double d = rho_derivative(spin, theta);
      deriv = std::max({deriv, -d, d - 1.0});
    }
    rep.checks.push_back({rep.suite, "rho_N(theta) <= theta", N, std::max(0.0, over), 0.0});
    rep.checks.push_back({rep.suite, "deficit <= pi - rho_N(pi)", N, std::max(0.0, excess), 1e-12});
    rep.checks.push_back({rep.suite, "0 <= rho_N' <= 1", N, std::max(0.0, deriv), 0.0});
  }
  rep.seconds = sw.seconds();
  return rep;
}

/// d(psi_p, psi_q) against d(g_* psi_p, g_* psi_q) for random rotations g.
inline SuiteReport verify_invariance(int max_N, std::uint64_t seed, int rotations = 10) {
  detail::Stopwatch sw;
  SuiteReport rep{"invariance", {}, 0.0};
  const SolverConfig cfg = detail::suite_config(seed);
  for (int N = 1; N <= std::min(max_N, kNumericSuiteCap); ++N) {
    const SpinLabel spin(N);
    Rng rng(derive_seed(seed, 2000 + static_cast<std::uint64_t>(N)));
    const BlochPoint p = detail::random_point(rng), q = detail::random_point(rng);
    const StateFunctional wp = coherent_state(spin, p), wq = coherent_state(spin, q);
    const double base = connes_numeric(spin, wp, wq, cfg).value;
    double worst = 0.0, closed = 0.0;
    for (int r = 0; r < rotations; ++r) {
      const Rotation g = detail::random_rotation(rng);
      const StateFunctional gp = pushforward(g, wp), gq = pushforward(g, wq);
      worst = std::max(worst, std::abs(connes_numeric(spin, gp, gq, cfg).value - base));
      const auto* tp = std::get_if<CoherentTag>(&gp.tag());
      const auto* tq = std::get_if<CoherentTag>(&gq.tag());
      closed = std::max(closed, (gp.density() - coherent_state(spin, tp->point).density()).norm() +
                                    (gq.density() - coherent_state(spin, tq->point).density()).norm());
    }
    rep.checks.push_back({rep.suite, "numeric distance is rotation invariant", N, worst, 2.0 * kSolverEnvelope});
    rep.checks.push_back({rep.suite, "pushforward of coherent is coherent", N, closed, 1e-10});
  }
  rep.seconds = sw.seconds();
  return rep;
}

/// rho_{N+1} >= rho_N exactly on a grid and d_{N+1} >= d_N - envelope numerically.
inline SuiteReport verify_monotonicity(int max_N, std::uint64_t seed, int pairs = 3) {
  detail::Stopwatch sw;
  SuiteReport rep{"monotonicity", {}, 0.0};
  for (int N = 1; N < std::max(max_N, 30); ++N) {
    const SpinLabel a(N), b(N + 1);
    double drop = 0.0, step = 0.0;
    double prev = -1.0;
    for (int i = 0; i < 64; ++i) {
      const double theta = sweep_theta(i, 64);
      const double ra = rho_closed(a, theta).value;
      drop = std::max(drop, ra - rho_closed(b, theta).value);
      if (i > 0) step = std::max(step, prev - ra);
      prev = ra;
    }
    rep.checks.push_back({rep.suite, "rho_{N+1} >= rho_N", N, std::max(0.0, drop), 0.0});
    rep.checks.push_back({rep.suite, "rho_N increasing in theta", N, std::max(0.0, step), 1e-14});
    rep.checks.push_back({rep.suite, "diameter nondecreasing", N,
                          std::max(0.0, diameter(a).value - diameter(b).value), 0.0});
  }

  const SolverConfig cfg = detail::suite_config(seed);
  const auto sample = detail::sample_pairs(seed, pairs);
  std::vector<double> prev(sample.size(), 0.0);
  for (int N = 1; N <= std::min(max_N, kNumericSuiteCap); ++N) {
    const SpinLabel spin(N);
    double drop = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
      const auto& [p, q] = sample[i];
      const double d = connes_numeric(spin, coherent_state(spin, p), coherent_state(spin, q), cfg).value;
      if (N > 1) drop = std::max(drop, prev[i] - d);
      prev[i] = d;
    }
    if (N > 1)
      rep.checks.push_back({rep.suite, "numeric d_N >= d_{N-1} - envelope", N, std::max(0.0, drop), kSolverEnvelope});
  }
  rep.seconds = sw.seconds();
  return rep;
}

inline SuiteReport verify_real_structure(int max_N, std::uint64_t seed) {
  detail::Stopwatch sw;
  SuiteReport rep{"real-structure", {}, 0.0};
  for (int N = 1; N <= std::min(max_N, 6); ++N) {
    const RealStructureReport r = real_structure_check(SpinLabel(N), 20, seed);
    rep.checks.push_back({rep.suite, "J^2 = -1", N, r.j_squared, 1e-12});
    rep.checks.push_back({rep.suite, "J antiunitary", N, r.antiunitarity, 1e-12});
    rep.checks.push_back({rep.suite, "J D = D J", N, r.commutes_with_d, 1e-12});
    rep.checks.push_back({rep.suite, "order zero", N, r.order_zero, 1e-12});
    rep.checks.push_back({rep.suite, "order one", N, r.order_one, 1e-10});
  }
  rep.seconds = sw.seconds();
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"spectra",    "metric-equivalence", "inequalities",
                                              "invariance", "monotonicity",       "real-structure"};
  return names;
}

inline std::vector<SuiteReport> run_suite(const std::string& name, int max_N, std::uint64_t seed) {
  if (max_N < 1) throw ContractViolation("verify: max-N must be >= 1");
  if (name == "all") {
    std::vector<SuiteReport> out;
    for (const auto& n : suite_names()) out.push_back(run_suite(n, max_N, seed).front());
    return out;
  }
  if (name == "spectra") return {verify_spectra(max_N)};
  if (name == "metric-equivalence") return {verify_metric_equivalence(max_N, seed)};
  if (name == "inequalities") return {verify_inequalities(max_N, seed)};
  if (name == "invariance") return {verify_invariance(max_N, seed)};
  if (name == "monotonicity") return {verify_monotonicity(max_N, seed)};
  if (name == "real-structure") return {verify_real_structure(max_N, seed)};
  throw ContractViolation("verify: unknown suite '" + name + "'");
}

}  // namespace fuzzy
