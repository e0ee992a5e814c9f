#pragma once

// Spin-j representations of su(2).
//
// Kets |j,m> are ordered by ascending m, so |j,m> has index m + j. Phases
// follow Condon-Shortley throughout.

#include <array>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <unordered_map>

#include "fuzzy/linalg.hpp"

namespace fuzzy {

/// A half-integer stored exactly as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int v) { return HalfInt(2 * v); }
  /// Accepts any double that is an exact multiple of 1/2 (up to 1e-9).
  static HalfInt from_double(double v) {
    const double t = 2.0 * v;
    const double r = std::round(t);
    if (!std::isfinite(v) || std::abs(t - r) > 1e-9)
      throw ContractViolation("HalfInt: value is not a multiple of 1/2");
    return HalfInt(static_cast<int>(r));
  }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

inline std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.twice() / 2);
  return std::to_string(h.twice()) + "/2";
}

/// Fuzzy-sphere level: cut-off N = 2j >= 1.
class SpinLabel {
 public:
  explicit SpinLabel(int n) : n_(n) {
    if (n < 1) throw ContractViolation("SpinLabel: N must be >= 1, got " + std::to_string(n));
  }
  int N() const { return n_; }
  double j() const { return 0.5 * n_; }
  HalfInt j_half() const { return HalfInt::from_twice(n_); }
  /// Dimension N + 1 of V_j.
  Eigen::Index dim() const { return n_ + 1; }
  /// Index of |j,m> in the ascending-m basis.
  Eigen::Index index(HalfInt m) const {
    if (!contains(m)) throw OutOfRange("SpinLabel: m = " + to_string(m) + " not in {-j..j}");
    return (m.twice() + n_) / 2;
  }
  bool contains(HalfInt m) const {
    return m.twice() >= -n_ && m.twice() <= n_ && (m.twice() + n_) % 2 == 0;
  }
  /// m value of the basis index i.
  double m_of(Eigen::Index i) const { return static_cast<double>(i) - j(); }
  bool operator==(const SpinLabel&) const = default;

 private:
  int n_;
};

/// pi_j(J_3), pi_j(J_1 + i J_2), pi_j(J_1 - i J_2) and the hermitian J_k.
struct GeneratorSet {
  ComplexMatrix H, E, F;
  ComplexMatrix J1, J2, J3;
  const ComplexMatrix& J(int k) const {
    switch (k) {
      case 1: return J1;
      case 2: return J2;
      case 3: return J3;
      default: throw ContractViolation("GeneratorSet::J: index must be 1, 2 or 3");
    }
  }
};

inline GeneratorSet generators(const SpinLabel& spin) {
  const Eigen::Index n = spin.dim();
  const double j = spin.j();
  GeneratorSet g;
  g.H = ComplexMatrix::Zero(n, n);
  g.E = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double m = spin.m_of(i);
    g.H(i, i) = m;
    if (i + 1 < n) g.E(i + 1, i) = std::sqrt((j - m) * (j + m + 1.0));
  }
  g.F = g.E.adjoint();
  g.J1 = 0.5 * (g.E + g.F);
  g.J2 = (g.E - g.F) / (2.0 * kI);
  g.J3 = g.H;
  return g;
}

/// x_k = J_k / sqrt(j(j+1)); satisfies sum_k x_k^2 = 1.
inline std::array<ComplexMatrix, 3> fuzzy_coordinates(const SpinLabel& spin) {
  const GeneratorSet g = generators(spin);
  const double s = 1.0 / std::sqrt(spin.j() * (spin.j() + 1.0));
  return {s * g.J1, s * g.J2, s * g.J3};
}

namespace detail {

inline double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

inline double racah_cg(int tj1, int tj2, int tj, int tm1, int tm2, int tm) {
  // All factorial arguments below are integers once the selection rules hold.
  const int a = (tj1 + tj2 - tj) / 2;
  const int b = (tj1 - tj2 + tj) / 2;
  const int c = (-tj1 + tj2 + tj) / 2;
  const int tot = (tj1 + tj2 + tj) / 2 + 1;
  double log_pref = std::log(tj + 1.0) + log_factorial(a) + log_factorial(b) + log_factorial(c) -
                    log_factorial(tot);
  log_pref += log_factorial((tj + tm) / 2) + log_factorial((tj - tm) / 2) +
              log_factorial((tj1 - tm1) / 2) + log_factorial((tj1 + tm1) / 2) +
              log_factorial((tj2 - tm2) / 2) + log_factorial((tj2 + tm2) / 2);
  log_pref *= 0.5;

  const int d1 = (tj1 - tm1) / 2;
  const int d2 = (tj2 + tm2) / 2;
  const int e1 = (tj - tj2 + tm1) / 2;
  const int e2 = (tj - tj1 - tm2) / 2;
  const int kmin = std::max({0, -e1, -e2});
  const int kmax = std::min({a, d1, d2});
  double sum = 0.0;
  for (int k = kmin; k <= kmax; ++k) {
    const double log_den = log_factorial(k) + log_factorial(a - k) + log_factorial(d1 - k) +
                           log_factorial(d2 - k) + log_factorial(e1 + k) + log_factorial(e2 + k);
    const double term = std::exp(log_pref - log_den);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

class CgCache {
 public:
  static CgCache& instance() {
    static CgCache cache;
    return cache;
  }
  template <typename Compute>
  double get(std::uint64_t key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = values_.find(key); it != values_.end()) return it->second;
    }
    const double v = compute();
    std::unique_lock lock(mutex_);
    values_.emplace(key, v);
    return v;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, double> values_;
};

}  // namespace detail

/// Clebsch-Gordan coefficient <j1 m1; j2 m2 | j m> (Condon-Shortley phase).
/// Returns 0 whenever a selection rule fails.
inline double clebsch_gordan(HalfInt j1, HalfInt j2, HalfInt j, HalfInt m1, HalfInt m2, HalfInt m) {
  const int tj1 = j1.twice(), tj2 = j2.twice(), tj = j.twice();
  const int tm1 = m1.twice(), tm2 = m2.twice(), tm = m.twice();
  if (tj1 < 0 || tj2 < 0 || tj < 0) throw ContractViolation("clebsch_gordan: negative spin");
  if (tm1 + tm2 != tm) return 0.0;
  if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm) > tj) return 0.0;
  if ((tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 || (tj + tm) % 2 != 0) return 0.0;
  if ((tj1 + tj2 + tj) % 2 != 0) return 0.0;
  if (tj < std::abs(tj1 - tj2) || tj > tj1 + tj2) return 0.0;

  constexpr int kOffset = 512;
  const bool cacheable = tj1 < kOffset && tj2 < kOffset && tj < kOffset;
  if (!cacheable) return detail::racah_cg(tj1, tj2, tj, tm1, tm2, tm);
  std::uint64_t key = 0;
  for (int v : {tj1, tj2, tj, tm1, tm2}) key = (key << 10) | static_cast<std::uint64_t>(v + kOffset);
  return detail::CgCache::instance().get(
      key, [&] { return detail::racah_cg(tj1, tj2, tj, tm1, tm2, tm); });
}

inline double clebsch_gordan(double j1, double j2, double j, double m1, double m2, double m) {
  return clebsch_gordan(HalfInt::from_double(j1), HalfInt::from_double(j2), HalfInt::from_double(j),
                        HalfInt::from_double(m1), HalfInt::from_double(m2), HalfInt::from_double(m));
}

namespace detail {
inline void check_harmonic_range(const SpinLabel& spin, int ell, int m) {
  if (ell < 0 || ell > spin.N()) {
    std::ostringstream os;
    os << "tensor operator: ell = " << ell << " outside 0.." << spin.N();
    throw OutOfRange(os.str());
  }
  if (std::abs(m) > ell) {
    std::ostringstream os;
    os << "tensor operator: |m| = " << std::abs(m) << " exceeds ell = " << ell;
    throw OutOfRange(os.str());
  }
}
}  // namespace detail

/// Irreducible tensor operator T^(j)_{ell,m}:
/// <j m''| T |j m'> = sqrt((2 ell + 1)/(2j + 1)) <j m'; ell m | j m''>.
inline ComplexMatrix tensor_operator(const SpinLabel& spin, int ell, int m) {
  detail::check_harmonic_range(spin, ell, m);
  const Eigen::Index n = spin.dim();
  const HalfInt j = spin.j_half();
  const HalfInt l = HalfInt::from_int(ell);
  const HalfInt mm = HalfInt::from_int(m);
  const double pref = std::sqrt((2.0 * ell + 1.0) / (spin.N() + 1.0));
  ComplexMatrix t = ComplexMatrix::Zero(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    const HalfInt m1 = HalfInt::from_twice(2 * static_cast<int>(col) - spin.N());
    const HalfInt m2 = m1 + mm;
    if (!spin.contains(m2)) continue;
    t(spin.index(m2), col) = pref * clebsch_gordan(j, l, j, m1, mm, m2);
  }
  return t;
}

struct FuzzyHarmonic {
  int ell = 0;
  int m = 0;
  ComplexMatrix matrix;
};

/// s = 1 normalisation: Y_{ell,m} = sqrt(4 pi/(2j+1)) <j j; ell 0 | j j> T_{ell,m}.
inline FuzzyHarmonic fuzzy_harmonic(const SpinLabel& spin, int ell, int m) {
  detail::check_harmonic_range(spin, ell, m);
  const HalfInt j = spin.j_half();
  const double norm = std::sqrt(4.0 * std::numbers::pi / (spin.N() + 1.0)) *
                      clebsch_gordan(j, HalfInt::from_int(ell), j, j, HalfInt{}, j);
  return {ell, m, norm * tensor_operator(spin, ell, m)};
}

/// exp(-i t X) for hermitian X.
inline ComplexMatrix unitary_exp(const ComplexMatrix& x, double t) {
  const EigenDecomposition ed = hermitian_eigen(x);
  ComplexVector phases(ed.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) phases(k) = std::exp(-kI * t * ed.eigenvalues(k));
  return ed.eigenvectors * phases.asDiagonal() * ed.eigenvectors.adjoint();
}

/// SU(2) element in z-y-z Euler form: R = R_z(phi) R_y(-theta) R_z(psi).
///
/// The sign of the y-angle is chosen so that R(phi, theta, 0) carries the
/// south pole (0,0,-1), the direction of |j,-j>, to the Bloch point of the
/// coherent state |phi,theta>.
struct Rotation {
  double phi = 0.0;
  double theta = 0.0;
  double psi = 0.0;

  Rotation inverse() const { return {-psi, -theta, -phi}; }

  /// Matching SO(3) matrix acting on Bloch-sphere vectors.
  Eigen::Matrix3d so3() const {
    auto rz = [](double a) {
      Eigen::Matrix3d r;
      r << std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a), 0, 0, 0, 1;
      return r;
    };
    auto ry = [](double a) {
      Eigen::Matrix3d r;
      r << std::cos(a), 0, std::sin(a), 0, 1, 0, -std::sin(a), 0, std::cos(a);
      return r;
    };
    return rz(phi) * ry(-theta) * rz(psi);
  }
};

/// pi_j(R) = exp(-i phi J_3) exp(+i theta J_2) exp(-i psi J_3).
inline ComplexMatrix representation(const SpinLabel& spin, const Rotation& r) {
  const GeneratorSet g = generators(spin);
  const Eigen::Index n = spin.dim();
  ComplexVector zphi(n), zpsi(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    zphi(i) = std::exp(-kI * r.phi * spin.m_of(i));
    zpsi(i) = std::exp(-kI * r.psi * spin.m_of(i));
  }
  return zphi.asDiagonal() * unitary_exp(g.J2, -r.theta) * zpsi.asDiagonal();
}

/// pi_j(R_(phi,theta)); maps |j,-j> onto the coherent vector |phi,theta>.
inline ComplexMatrix wigner_rotation(const SpinLabel& spin, double phi, double theta) {
  return representation(spin, Rotation{phi, theta, 0.0});
}

}  // namespace fuzzy
