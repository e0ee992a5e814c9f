#pragma once

#include <cstdint>
#include <random>

#include "fuzzy/linalg.hpp"

namespace fuzzy {

using Rng = std::mt19937_64;

/// Seed for stream `stream` derived from a base seed (splitmix64 finaliser).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Entries with independent standard normal real and imaginary parts.
inline ComplexMatrix random_complex(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double re = nd(rng);
      const double im = nd(rng);
      m(r, c) = Complex(re, im);
    }
  return m;
}

inline ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng) {
  return hermitian_part(random_complex(n, n, rng));
}

inline ComplexVector random_unit_vector(Eigen::Index n, Rng& rng) {
  ComplexVector v = random_complex(n, 1, rng);
  return v / v.norm();
}

/// Haar-ish random unitary from the QR factorisation of a Gaussian matrix.
inline ComplexMatrix random_unitary(Eigen::Index n, Rng& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_complex(n, n, rng));
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

}  // namespace fuzzy
