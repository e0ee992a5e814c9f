// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fuzzy/fuzzy.hpp"

namespace {

using namespace fuzzy;

constexpr double pi = std::numbers::pi;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome spectra() {
  double worst = 0.0;
  for (int N = 1; N <= 12; ++N) {
    const SpinLabel s(N);
    const RealVector ev = build_irreducible(s).eigen().eigenvalues;
    worst = std::max(worst, spectrum_deviation(ev, predicted_spectrum(DiracKind::irreducible, s)));
  }
  for (int N = 1; N <= 6; ++N) {
    const SpinLabel s(N);
    const RealVector ev = build_full(s).eigen().eigenvalues;
    worst = std::max(worst, spectrum_deviation(ev, predicted_spectrum(DiracKind::full, s)));
  }
  return {worst <= 1e-9, "max deviation " + fmt("%.3e", worst)};
}

Outcome metric_equivalence() {
  const SuiteReport r = verify_metric_equivalence(5, kSeed, 100);
  double worst = 0.0;
  for (const auto& c : r.checks) worst = std::max(worst, c.residual);
  return {r.passed() && r.checks.size() == 5, "max |difference| " + fmt("%.3e", worst)};
}

Outcome ball_pairs() {
  Rng rng(kSeed);
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto draw = [&] {
    Eigen::Vector3d v(nd(rng), nd(rng), nd(rng));
    return Eigen::Vector3d(v * (std::cbrt(u(rng)) / v.norm()));
  };
  SolverConfig cfg;
  cfg.seed = kSeed;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Eigen::Vector3d x = draw(), y = draw();
    const double got = connes_numeric(SpinLabel(1), ball_state(x), ball_state(y), cfg).value;
    worst = std::max(worst, std::abs(got - 0.5 * (x - y).norm()));
  }
  return {worst <= 1e-3, "max abs error " + fmt("%.3e", worst)};
}

Outcome basis_pairs() {
  SolverConfig cfg;
  cfg.seed = kSeed;
  double worst = 0.0;
  int count = 0;
  for (int N : {2, 3, 4}) {
    const SpinLabel s(N);
    for (int a = -N; a <= N; a += 2)
      for (int b = a + 2; b <= N; b += 2) {
        const HalfInt m = HalfInt::from_twice(a), n = HalfInt::from_twice(b);
        const double expect = basis_chain(s, m, n).value;
        const double got = connes_numeric(s, basis_state(s, m), basis_state(s, n), cfg).value;
        worst = std::max(worst, std::abs(got - expect) / expect);
        ++count;
      }
  }
  return {worst <= 1e-3, std::to_string(count) + " pairs, max rel error " + fmt("%.3e", worst)};
}

Outcome diagonal_lp() {
  double worst = 0.0;
  for (int N = 1; N <= 12; ++N) {
    const SpinLabel s(N);
    for (int i = 0; i < 32; ++i) {
      const double theta = sweep_theta(i, 32);
      worst = std::max(worst, std::abs(connes_numeric_diagonal(s, theta, 0.0).value - rho_closed(s, theta).value));
    }
  }
  return {worst <= 1e-10, "max abs difference " + fmt("%.3e", worst)};
}

Outcome hat_a_certificate() {
  double norm_err = 0.0, ladder_err = 0.0;
  for (int N = 1; N <= 8; ++N) {
    const SpinLabel s(N);
    const GeneratorSet g = generators(s);
    const ComplexMatrix a = hat_a(s);
    norm_err = std::max(norm_err, std::abs(commutator_seminorm(s, a) - 1.0));
    ComplexMatrix shift = ComplexMatrix::Zero(s.dim(), s.dim());
    for (Eigen::Index i = 0; i + 1 < s.dim(); ++i) shift(i + 1, i) = 1.0;
    ladder_err = std::max(ladder_err, (commutator(g.E, a) - shift).cwiseAbs().maxCoeff());
  }
  return {norm_err <= 1e-10 && ladder_err <= 1e-10,
          "seminorm error " + fmt("%.3e", norm_err) + ", ladder error " + fmt("%.3e", ladder_err)};
}

Outcome property_suites() {
  int checks = 0, failures = 0;
  std::string failed;
  for (const SuiteReport& r : {verify_inequalities(8, kSeed), verify_invariance(8, kSeed), verify_monotonicity(8, kSeed)}) {
    checks += static_cast<int>(r.checks.size());
    failures += r.failures();
    for (const auto& c : r.checks)
      if (!c.passed()) failed += " " + r.suite + "/" + c.name + "@N=" + std::to_string(c.N);
  }
  return {failures == 0, std::to_string(checks) + " checks, " + std::to_string(failures) + " failures" + failed};
}

Outcome figures() {
  const std::filesystem::path dir = std::filesystem::current_path() / "acceptance_figures";
  std::filesystem::create_directories(dir);
  bool ok = true;
  double above = 0.0, non_monotone = 0.0, not_at_pi = 0.0;
  for (const auto& [name, levels] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"rho-asymp", {10, 30, 500}}, {"rho-drop", {5, 10, 20, 30}}}) {
    constexpr int samples = 201;
    const auto rows = rho_sweep({levels, samples});
    std::ofstream f(dir / (name + ".csv"));
    f << "N,theta,theta_over_pi,rho,deficit\n";
    char buf[160];
    for (const auto& r : rows) {
      std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g\n", r.N, r.theta, r.theta_over_pi, r.rho, r.deficit);
      f << buf;
    }
    ok = ok && static_cast<bool>(f);
    for (std::size_t b = 0; b < rows.size(); b += samples) {
      double best = 0.0;
      for (std::size_t i = b; i < b + samples; ++i) {
        above = std::max(above, rows[i].rho - rows[i].theta);
        best = std::max(best, rows[i].deficit);
        if (b >= samples) non_monotone = std::max(non_monotone, rows[i - samples].rho - rows[i].rho);
      }
      not_at_pi = std::max(not_at_pi, best - rows[b + samples - 1].deficit);
    }
  }
  const double d501 = diameter(SpinLabel(501)).value, bound = 2.0 * std::asin(500.0 / 502.0);
  ok = ok && above <= 0.0 && non_monotone <= 0.0 && not_at_pi <= 0.0 && d501 >= bound;
  return {ok, "max(rho - theta) " + fmt("%.2e", above) + ", N-monotonicity gap " + fmt("%.2e", non_monotone) +
                  ", diameter(501) " + fmt("%.10f", d501) + " >= " + fmt("%.10f", bound)};
}

Outcome deficit_convergence() {
  double prev = uniform_deficit(1);
  bool monotone = true;
  for (int N = 2; N <= 500; ++N) {
    const double d = uniform_deficit(N);
    monotone = monotone && d <= prev;
    prev = d;
  }
  const double d100 = uniform_deficit(100), d500 = uniform_deficit(500);
  return {monotone && d100 < 0.30 && d500 < 0.14, std::string(monotone ? "nonincreasing" : "NOT monotone") +
                                                      ", deficit(100) " + fmt("%.6f", d100) + ", deficit(500) " +
                                                      fmt("%.6f", d500)};
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0 means no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "spectrum exactness", 10.0, spectra},
      {2, "metric equivalence", 0.0, metric_equivalence},
      {3, "N = 1 ball distances", 60.0, ball_pairs},
      {4, "basis-chain distances", 0.0, basis_pairs},
      {5, "diagonal LP against rho_N", 0.0, diagonal_lp},
      {6, "hat-a certificate", 0.0, hat_a_certificate},
      {7, "sandwich, invariance and monotonicity suites", 300.0, property_suites},
      {8, "rho_N figure reproduction", 5.0, figures},
      {9, "uniform convergence of the deficit", 0.0, deficit_convergence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0.0 && seconds > c.budget_seconds) {
      o.passed = false;
      o.detail += ", over the " + fmt("%.0f", c.budget_seconds) + " s budget";
    }
    if (!o.passed) ++failed;
    std::printf("[%s] criterion %d: %s (%s; %.2f s)\n", o.passed ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(),
                seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
