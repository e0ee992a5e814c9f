#pragma once

// Large-N behaviour of rho_N and of the pole-to-pole distance. Everything here
// uses closed forms only.

#include <cmath>
#include <numbers>
#include <vector>

#include "fuzzy/distance.hpp"

namespace fuzzy {

/// Great-circle distance on the unit sphere.
inline double geodesic_distance(const BlochPoint& p, const BlochPoint& q) {
  const double dot = p.direction().dot(q.direction());
  return std::acos(std::clamp(dot, -1.0, 1.0));
}

struct SweepSpec {
  std::vector<int> levels;
  int theta_samples = 64;  // grid on [0, pi], endpoints included
};

struct SweepRow {
  int N = 0;
  double theta = 0.0;
  double theta_over_pi = 0.0;
  double rho = 0.0;
  double deficit = 0.0;  // theta - rho
};

inline double sweep_theta(int i, int samples) {
  if (i == samples - 1) return std::numbers::pi;
  return std::numbers::pi * static_cast<double>(i) / static_cast<double>(samples - 1);
}

/// One row per (N, theta), sorted by N then theta.
inline std::vector<SweepRow> rho_sweep(const SweepSpec& spec) {
  if (spec.theta_samples < 2) throw ContractViolation("rho_sweep: need at least 2 theta samples");
  if (spec.levels.empty()) throw ContractViolation("rho_sweep: empty level list");
  std::vector<int> levels = spec.levels;
  std::sort(levels.begin(), levels.end());
  std::vector<SweepRow> rows;
  rows.reserve(levels.size() * static_cast<std::size_t>(spec.theta_samples));
  for (int N : levels) {
    const SpinLabel spin(N);
    for (int i = 0; i < spec.theta_samples; ++i) {
      const double theta = sweep_theta(i, spec.theta_samples);
      const double rho = rho_closed(spin, theta).value;
      rows.push_back({N, theta, theta / std::numbers::pi, rho, theta - rho});
    }
  }
  return rows;
}

/// 2 arcsin((N-1)/(N+1)), a lower bound for rho_N(pi) proven for odd N.
inline double arcsin_bound(int N) {
  if (N < 1) throw ContractViolation("arcsin_bound: N must be >= 1");
  return 2.0 * std::asin(static_cast<double>(N - 1) / static_cast<double>(N + 1));
}

/// pi - rho_N(pi), which bounds sup_theta (theta - rho_N(theta)).
inline double uniform_deficit(int N) { return std::numbers::pi - diameter(SpinLabel(N)).value; }

}  // namespace fuzzy
