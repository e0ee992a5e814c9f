#pragma once

// Numerical Connes distance.
//
// The supremum of Tr((rho - rho') a) over hermitian a with ||[D_N, a]|| <= 1
// equals the supremum of the scale-free ratio
//   f(a) = Tr((rho - rho') a) / ||[D_N, a]||.
// f is maximised with L-BFGS on a smoothed seminorm, from several starting
// points. The reported value is the exact ratio of the best iterate, so it is
// always a feasible lower bound.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <ceres/ceres.h>

#include "fuzzy/convergence.hpp"
#include "fuzzy/dirac.hpp"
#include "fuzzy/random.hpp"

namespace fuzzy {

struct SolverConfig {
  int restarts = 16;
  int max_iterations = 2000;   // per annealing stage
  double smoothing = 1e-3;     // initial relative temperature
  int anneal_steps = 2;
  double anneal_factor = 0.1;
  double tolerance = 1e-8;     // relative objective change
  std::uint64_t seed = 0;
  int threads = 0;             // 0 picks FUZZY_THREADS or the hardware count

  void validate() const {
    if (restarts < 1) throw ContractViolation("SolverConfig: restarts must be positive");
    if (max_iterations < 1) throw ContractViolation("SolverConfig: max_iterations must be positive");
    if (!(smoothing > 0.0)) throw ContractViolation("SolverConfig: smoothing must be positive");
    if (anneal_steps < 0) throw ContractViolation("SolverConfig: anneal_steps must be nonnegative");
    if (!(anneal_factor > 0.0 && anneal_factor < 1.0))
      throw ContractViolation("SolverConfig: anneal_factor must lie in (0, 1)");
    if (!(tolerance > 0.0)) throw ContractViolation("SolverConfig: tolerance must be positive");
    if (threads < 0) throw ContractViolation("SolverConfig: threads must be nonnegative");
  }

  int resolved_threads() const {
    int t = threads;
    if (t == 0) {
      if (const char* env = std::getenv("FUZZY_THREADS")) t = std::atoi(env);
    }
    if (t <= 0) t = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return std::min(t, restarts);
  }
};

namespace detail {

/// Real coordinates of a hermitian n x n matrix: x[r n + r] = a_rr and, for
/// r < c, x[r n + c] = Re a_rc, x[c n + r] = Im a_rc.
inline ComplexMatrix unpack_hermitian(const double* x, Eigen::Index n) {
  ComplexMatrix a(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    a(r, r) = x[r * n + r];
    for (Eigen::Index c = r + 1; c < n; ++c) {
      a(r, c) = Complex(x[r * n + c], x[c * n + r]);
      a(c, r) = std::conj(a(r, c));
    }
  }
  return a;
}

inline std::vector<double> pack_hermitian(const ComplexMatrix& a) {
  const Eigen::Index n = a.rows();
  std::vector<double> x(static_cast<std::size_t>(n * n));
  for (Eigen::Index r = 0; r < n; ++r) {
    x[static_cast<std::size_t>(r * n + r)] = a(r, r).real();
    for (Eigen::Index c = r + 1; c < n; ++c) {
      x[static_cast<std::size_t>(r * n + c)] = a(r, c).real();
      x[static_cast<std::size_t>(c * n + r)] = a(r, c).imag();
    }
  }
  return x;
}

/// Gradient of x -> Re Tr(G a(x)) for hermitian G.
inline void pack_gradient(const ComplexMatrix& g, double* out) {
  const Eigen::Index n = g.rows();
  for (Eigen::Index r = 0; r < n; ++r) {
    out[r * n + r] = g(r, r).real();
    for (Eigen::Index c = r + 1; c < n; ++c) {
      out[r * n + c] = 2.0 * g(r, c).real();
      out[c * n + r] = 2.0 * g(r, c).imag();
    }
  }
}

inline ComplexMatrix traceless(const ComplexMatrix& a) {
  return a - (a.trace() / static_cast<double>(a.rows())) * identity(a.rows());
}

/// Ratio with a smoothed seminorm. With K = i[D, a (x) 1], u = ||K||_F and
/// M = K / u, the smoothed norm is s = u mu log sum_i 2 cosh(lambda_i(M) / mu),
/// which is positively homogeneous and exceeds ||K||.
class SmoothedRatio {
 public:
  SmoothedRatio(const SpinLabel& spin, ComplexMatrix delta, double mu)
      : n_(spin.dim()), g_(generators(spin)), delta_(std::move(delta)), mu_(mu) {
    d_ = ComplexMatrix::Zero(2 * n_, 2 * n_);
    for (int k = 1; k <= 3; ++k) d_ += kron(g_.J(k), pauli(k));
  }

  Eigen::Index dim() const { return n_; }
  void set_mu(double mu) { mu_ = mu; }

  /// f and, if grad is non-null, its gradient. Returns false when the
  /// commutator vanishes and f is undefined.
  bool evaluate(const double* x, double* f, double* grad) const {
    const ComplexMatrix a = unpack_hermitian(x, n_);
    const ComplexMatrix k = kI * dirac_commutator(g_, a);
    const double u = k.norm();
    if (!(u > 0.0) || !std::isfinite(u)) return false;
    const ComplexMatrix m = hermitian_part(k / u);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, grad ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    const RealVector& lam = es.eigenvalues();
    const double top = lam.cwiseAbs().maxCoeff();
    double z = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i)
      z += std::exp((lam(i) - top) / mu_) + std::exp((-lam(i) - top) / mu_);
    const double smooth_unit = top + mu_ * std::log(z);
    const double s = u * smooth_unit;
    const double l = (delta_ * a).trace().real();
    *f = l / s;
    if (grad == nullptr) return true;

    RealVector w(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i)
      w(i) = (std::exp((lam(i) - top) / mu_) - std::exp((-lam(i) - top) / mu_)) / z;
    const ComplexMatrix& v = es.eigenvectors();
    const ComplexMatrix dg = v * w.cast<Complex>().asDiagonal() * v.adjoint();
    const double inner = w.dot(lam);
    const ComplexMatrix ws = dg + (smooth_unit - inner) * m;  // d s / d K
    const ComplexMatrix gs = hermitian_part(partial_trace_inner(kI * commutator(ws, d_), 2));
    const ComplexMatrix gf = (delta_ * s - gs * l) / (s * s);
    pack_gradient(hermitian_part(gf), grad);
    return true;
  }

 private:
  Eigen::Index n_;
  GeneratorSet g_;
  ComplexMatrix delta_;
  ComplexMatrix d_;
  double mu_;
};

/// Minimises -f for Ceres.
class NegatedRatio final : public ceres::FirstOrderFunction {
 public:
  explicit NegatedRatio(const SmoothedRatio* ratio) : ratio_(ratio) {}
  bool Evaluate(const double* parameters, double* cost, double* gradient) const override {
    double f = 0.0;
    if (!ratio_->evaluate(parameters, &f, gradient)) return false;
    *cost = -f;
    if (gradient != nullptr)
      for (int i = 0; i < NumParameters(); ++i) gradient[i] = -gradient[i];
    return true;
  }
  int NumParameters() const override { return static_cast<int>(ratio_->dim() * ratio_->dim()); }

 private:
  const SmoothedRatio* ratio_;
};

struct RestartOutcome {
  double ratio = -std::numeric_limits<double>::infinity();
  ComplexMatrix a;
  bool converged = false;
  long iterations = 0;
  double last_change = std::numeric_limits<double>::infinity();
};

inline double exact_ratio(const GeneratorSet& g, const ComplexMatrix& delta, const ComplexMatrix& a) {
  const ComplexMatrix c = dirac_commutator(g, a);
  if (c.isZero(0.0)) return -std::numeric_limits<double>::infinity();
  return (delta * a).trace().real() / operator_norm(c);
}

inline RestartOutcome run_restart(const SpinLabel& spin, const ComplexMatrix& delta, ComplexMatrix start,
                                  const SolverConfig& cfg) {
  const GeneratorSet g = generators(spin);
  RestartOutcome out;
  start = traceless(hermitian_part(start));
  if ((delta * start).trace().real() < 0.0) start = -start;
  double scale = start.norm();
  if (!(scale > 0.0)) return out;
  start /= scale;
  out.ratio = exact_ratio(g, delta, start);
  out.a = start;

  SmoothedRatio ratio(spin, delta, cfg.smoothing);
  std::vector<double> x = pack_hermitian(start);
  double mu = cfg.smoothing;
  for (int stage = 0; stage <= cfg.anneal_steps; ++stage, mu *= cfg.anneal_factor) {
    ratio.set_mu(mu);
    ceres::GradientProblemSolver::Options options;
    options.line_search_direction_type = ceres::LBFGS;
    options.max_num_iterations = cfg.max_iterations;
    options.function_tolerance = cfg.tolerance;
    options.gradient_tolerance = 1e-14;
    options.parameter_tolerance = 1e-14;
    options.logging_type = ceres::SILENT;
    options.minimizer_progress_to_stdout = false;
    ceres::GradientProblem problem(new NegatedRatio(&ratio));
    ceres::GradientProblemSolver::Summary summary;
    const double before = out.ratio;
    ceres::Solve(options, problem, x.data(), &summary);
    out.iterations += static_cast<long>(summary.iterations.size());
    out.converged = summary.termination_type == ceres::CONVERGENCE;

    ComplexMatrix a = traceless(unpack_hermitian(x.data(), spin.dim()));
    scale = a.norm();
    if (!(scale > 0.0) || !std::isfinite(scale)) break;
    a /= scale;
    x = pack_hermitian(a);
    const double r = exact_ratio(g, delta, a);
    if (r > out.ratio) {
      out.ratio = r;
      out.a = a;
    }
    out.last_change = std::abs(out.ratio - before) / std::max(1.0, std::abs(out.ratio));
  }
  return out;
}

/// Starting points: the ramp hat_a, rho - rho', the ramp seen from the frame
/// of each coherent state, then seeded random hermitian matrices.
inline std::vector<ComplexMatrix> starting_points(const SpinLabel& spin, const StateFunctional& omega,
                                                  const StateFunctional& omega_prime, const ComplexMatrix& delta,
                                                  const SolverConfig& cfg) {
  std::vector<ComplexMatrix> starts;
  const ComplexMatrix ramp = hat_a(spin);
  starts.push_back(ramp);
  starts.push_back(delta);
  for (const StateFunctional* s : {&omega_prime, &omega}) {
    if (const auto* c = std::get_if<CoherentTag>(&s->tag())) {
      const ComplexMatrix u = wigner_rotation(spin, c->point.phi, c->point.theta);
      starts.push_back(u * ramp * u.adjoint());
    }
  }
  for (int r = static_cast<int>(starts.size()); r < cfg.restarts; ++r) {
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(r)));
    starts.push_back(random_hermitian(spin.dim(), rng));
  }
  starts.resize(static_cast<std::size_t>(cfg.restarts));
  return starts;
}

}  // namespace detail

/// Lower bound on d(omega, omega') with a certificate a*, ||[D_N, a*]|| = 1.
inline DistanceResult connes_numeric(const SpinLabel& spin, const StateFunctional& omega,
                                     const StateFunctional& omega_prime, const SolverConfig& cfg = {}) {
  cfg.validate();
  if (!(omega.spin() == spin) || !(omega_prime.spin() == spin))
    throw ContractViolation("connes_numeric: states live at a different spin level");
  const ComplexMatrix delta = omega.density() - omega_prime.density();

  DistanceResult result{0.0, DistanceMethod::numerical};
  SolverDiagnostics diag;
  if (delta.isZero(0.0)) {
    result.certificate = hat_a(spin);
    diag.converged = true;
    diag.certificate_residual = std::abs(commutator_seminorm(spin, *result.certificate) - 1.0);
    result.diagnostics = diag;
    return result;
  }

  const std::vector<ComplexMatrix> starts = detail::starting_points(spin, omega, omega_prime, delta, cfg);
  std::vector<detail::RestartOutcome> outcomes(starts.size());
  const int threads = cfg.resolved_threads();
  {
    std::vector<std::jthread> pool;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < starts.size(); i = next++)
          outcomes[i] = detail::run_restart(spin, delta, starts[i], cfg);
      });
  }

  std::size_t best = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    diag.iterations += outcomes[i].iterations;
    if (outcomes[i].converged) ++diag.converged_restarts;
    if (outcomes[i].ratio > outcomes[best].ratio) best = i;
  }
  const detail::RestartOutcome& win = outcomes[best];
  if (!std::isfinite(win.ratio)) throw ContractViolation("connes_numeric: every starting point was degenerate");

  const double norm = commutator_seminorm(spin, win.a);
  const ComplexMatrix cert = win.a / norm;
  result.value = std::max(0.0, (delta * cert).trace().real());
  result.certificate = cert;
  diag.restarts = static_cast<int>(outcomes.size());
  diag.best_restart = static_cast<int>(best);
  diag.converged = win.converged;
  diag.achieved_tolerance = win.last_change;
  diag.certificate_residual = std::abs(commutator_seminorm(spin, cert) - 1.0);
  result.diagnostics = diag;
  return result;
}

enum class CoherentMethod { closed, numeric, bounds };

inline const char* to_string(CoherentMethod m) {
  switch (m) {
    case CoherentMethod::closed: return "closed";
    case CoherentMethod::numeric: return "numeric";
    case CoherentMethod::bounds: return "bounds";
  }
  return "unknown";
}

/// Distance between coherent states at p and q. Coincident points, N = 1 and
/// antipodal points are exact; otherwise the result is the interval
/// [rho_N(gamma), gamma] or a numerical value inside it.
inline DistanceResult coherent_distance(const SpinLabel& spin, const BlochPoint& p, const BlochPoint& q,
                                        CoherentMethod method, const SolverConfig& cfg = {}) {
  const double gamma = geodesic_distance(p, q);
  if (gamma == 0.0) return {0.0, DistanceMethod::closed_form};
  if (spin.N() == 1) return {std::sin(0.5 * gamma), DistanceMethod::closed_form};
  if (gamma >= std::numbers::pi - 1e-12) return diameter(spin);

  const double lower = rho_closed(spin, gamma).value;
  switch (method) {
    case CoherentMethod::closed:
      throw ContractViolation("coherent_distance: no closed form for this pair; use bounds or numeric");
    case CoherentMethod::bounds: {
      DistanceResult r{lower, DistanceMethod::interval};
      r.lower = lower;
      r.upper = gamma;
      return r;
    }
    case CoherentMethod::numeric: {
      DistanceResult r = connes_numeric(spin, coherent_state(spin, p), coherent_state(spin, q), cfg);
      r.lower = lower;
      r.upper = gamma;
      return r;
    }
  }
  throw ContractViolation("coherent_distance: unknown method");
}

}  // namespace fuzzy
