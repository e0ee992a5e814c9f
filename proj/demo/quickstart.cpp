// Spectrum of D_N, a few closed-form distances, and one numerical distance
// with its certificate.

#include <cstdio>

#include "fuzzy/fuzzy.hpp"

int main() {
  using namespace fuzzy;
  const SpinLabel spin(4);

  std::printf("irreducible spectrum at N = 4:\n");
  for (const auto& e : bin_spectrum(build_irreducible(spin).eigen().eigenvalues))
    std::printf("  %+.6f  x%d\n", e.value, e.multiplicity);

  std::printf("diameter            %.10f\n", diameter(spin).value);
  std::printf("rho_4(pi/2)         %.10f\n", rho_closed(spin, std::numbers::pi / 2).value);

  const BlochPoint p{0.7, 1.2}, q{-0.4, 0.5};
  SolverConfig cfg;
  cfg.seed = 7;
  const DistanceResult d = coherent_distance(spin, p, q, CoherentMethod::numeric, cfg);
  std::printf("coherent pair       %.10f in [%.6f, %.6f]\n", d.value, *d.lower, *d.upper);
  std::printf("certificate norm    %.3e from 1\n", d.diagnostics->certificate_residual);
  return 0;
}
