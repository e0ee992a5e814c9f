#pragma once

// States on A_N stored as density matrices.
//
// Orientation: the coherent vector |phi,theta> has Bloch vector
// (sin t cos p, sin t sin p, -cos t), i.e. theta = 0 is the south pole |j,-j>.
// For N = 1 the pure ball state omega_x with x = (sin t cos p, sin t sin p, -cos t)
// therefore coincides with psi^1_(phi,theta); see ball_point().

#include <array>
#include <cmath>
#include <numbers>
#include <variant>

#include "fuzzy/su2.hpp"

namespace fuzzy {

struct BlochPoint {
  double phi = 0.0;    // (-pi, pi]
  double theta = 0.0;  // [0, pi]

  /// Wraps into the canonical chart; theta outside [0, pi] is reflected.
  static BlochPoint normalized(double phi, double theta) {
    constexpr double pi = std::numbers::pi;
    theta = std::remainder(theta, 2.0 * pi);  // (-pi, pi]
    if (theta < 0.0) {
      theta = -theta;
      phi += pi;
    }
    phi = std::remainder(phi, 2.0 * pi);
    if (phi <= -pi) phi += 2.0 * pi;
    return {phi, theta};
  }

  /// Unit vector of this point in the library's orientation.
  Eigen::Vector3d direction() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), -std::cos(theta)};
  }

  static BlochPoint from_direction(const Eigen::Vector3d& v) {
    const Eigen::Vector3d u = v.normalized();
    const double theta = std::acos(std::clamp(-u.z(), -1.0, 1.0));
    const double phi = (std::abs(u.x()) + std::abs(u.y()) > 0.0) ? std::atan2(u.y(), u.x()) : 0.0;
    return normalized(phi, theta);
  }
};

/// Ball vector of the pure N = 1 state equal to psi^1_(phi,theta).
inline Eigen::Vector3d ball_point(const BlochPoint& p) { return p.direction(); }

struct CoherentTag {
  BlochPoint point;
};
struct BasisTag {
  HalfInt m;
};
struct BallTag {
  Eigen::Vector3d x;
};
struct GenericTag {};
using StateTag = std::variant<CoherentTag, BasisTag, BallTag, GenericTag>;

class StateFunctional {
 public:
  StateFunctional(SpinLabel spin, ComplexMatrix density, StateTag tag = GenericTag{})
      : spin_(spin), density_(std::move(density)), tag_(std::move(tag)) {
    if (density_.rows() != spin_.dim() || density_.cols() != spin_.dim())
      throw ContractViolation("StateFunctional: density has the wrong dimension");
    if (!is_hermitian(density_)) throw ContractViolation("StateFunctional: density is not hermitian");
    if (std::abs(density_.trace() - Complex(1.0)) > 1e-10)
      throw ContractViolation("StateFunctional: density does not have unit trace");
  }

  const SpinLabel& spin() const { return spin_; }
  const ComplexMatrix& density() const { return density_; }
  const StateTag& tag() const { return tag_; }

  /// omega(a) = Tr(rho a).
  Complex operator()(const ComplexMatrix& a) const { return (density_ * a).trace(); }

 private:
  SpinLabel spin_;
  ComplexMatrix density_;
  StateTag tag_;
};

/// Coherent vector sum_m binom(2j, j+m)^1/2 e^{-i m phi} sin^{j+m}(t/2) cos^{j-m}(t/2) |j,m>,
/// with coefficients formed in the log domain.
inline ComplexVector bloch_vector(const SpinLabel& spin, const BlochPoint& p) {
  const int N = spin.N();
  const double j = spin.j();
  const double s = std::sin(0.5 * p.theta);
  const double c = std::cos(0.5 * p.theta);
  const double ls = std::log(std::abs(s));
  const double lc = std::log(std::abs(c));
  const double lgn = std::lgamma(N + 1.0);
  ComplexVector v(spin.dim());
  for (int k = 0; k <= N; ++k) {  // k = j + m
    const double m = k - j;
    double mag = 0.0;
    if (k == 0) {
      mag = std::pow(c, N);
    } else if (k == N) {
      mag = std::pow(s, N);
    } else if (s != 0.0 && c != 0.0) {
      const double log_mag = 0.5 * (lgn - std::lgamma(k + 1.0) - std::lgamma(N - k + 1.0)) + k * ls +
                             (N - k) * lc;
      mag = std::exp(log_mag);  // flushes to 0 below ~1e-308
      if (s < 0.0 && k % 2 == 1) mag = -mag;
      if (c < 0.0 && (N - k) % 2 == 1) mag = -mag;
    }
    v(k) = mag * std::exp(-kI * (m * p.phi));
  }
  return v;
}

inline StateFunctional coherent_state(const SpinLabel& spin, const BlochPoint& p) {
  const ComplexVector v = bloch_vector(spin, p);
  return {spin, v * v.adjoint(), CoherentTag{p}};
}

inline StateFunctional basis_state(const SpinLabel& spin, HalfInt m) {
  const Eigen::Index i = spin.index(m);
  ComplexMatrix rho = ComplexMatrix::Zero(spin.dim(), spin.dim());
  rho(i, i) = 1.0;
  return {spin, rho, BasisTag{m}};
}

/// Bloch-ball state of M_2(C): rho = (1 + x . sigma) / 2 in the |1/2,m> basis
/// ordered m = -1/2, +1/2.
inline StateFunctional ball_state(const Eigen::Vector3d& x) {
  if (!x.allFinite() || x.norm() > 1.0 + Tolerances::ball)
    throw ContractViolation("ball_state: |x| exceeds 1");
  // sigma_k in the ascending-m basis is the reversed-order Pauli matrix.
  const SpinLabel spin(1);
  const GeneratorSet g = generators(spin);
  ComplexMatrix rho = 0.5 * identity(2);
  rho += x.x() * g.J1 + x.y() * g.J2 + x.z() * g.J3;
  return {spin, rho, BallTag{x}};
}

/// g_* omega (a) = omega(pi(g) a pi(g)^dagger), i.e. rho -> pi(g)^dagger rho pi(g).
/// A coherent state at p is carried to the coherent state at R(g)^{-1} p.
inline StateFunctional pushforward(const Rotation& g, const StateFunctional& omega) {
  const ComplexMatrix u = representation(omega.spin(), g);
  ComplexMatrix rho = u.adjoint() * omega.density() * u;
  StateTag tag = GenericTag{};
  if (const auto* c = std::get_if<CoherentTag>(&omega.tag())) {
    const Eigen::Vector3d moved = g.so3().transpose() * c->point.direction();
    tag = CoherentTag{BlochPoint::from_direction(moved)};
  }
  return {omega.spin(), hermitian_part(rho), tag};
}

struct DerivativeResiduals {
  double h = 0.0;  // |psi([H,a]) + i d_phi psi(a)|
  double e = 0.0;  // |psi([E,a]) + e^{i phi}(d_theta + i cot(theta) d_phi) psi(a)|
  double f = 0.0;  // |psi([F,a]) - e^{-i phi}(d_theta - i cot(theta) d_phi) psi(a)|
  double max() const { return std::max({h, e, f}); }
};

/// Compares psi([X,a]) for X in {H, E, F} with central finite differences of
/// psi_(phi,theta)(a) in phi and theta. With E raising m and the Bloch
/// vectors above, the E and F identities carry an overall minus sign.
inline DerivativeResiduals derivative_identities_check(const SpinLabel& spin, const ComplexMatrix& a,
                                                       const BlochPoint& p, double step = 1e-4) {
  if (p.theta < 1e-3 || p.theta > std::numbers::pi - 1e-3)
    throw ContractViolation("derivative_identities_check: theta too close to a pole");
  if (a.rows() != spin.dim() || a.cols() != spin.dim())
    throw ContractViolation("derivative_identities_check: dimension mismatch");
  const GeneratorSet g = generators(spin);
  auto psi = [&](double phi, double theta, const ComplexMatrix& x) {
    const ComplexVector v = bloch_vector(spin, {phi, theta});
    return v.dot(x * v);
  };
  const Complex d_phi = (psi(p.phi + step, p.theta, a) - psi(p.phi - step, p.theta, a)) / (2.0 * step);
  const Complex d_theta = (psi(p.phi, p.theta + step, a) - psi(p.phi, p.theta - step, a)) / (2.0 * step);
  const double cot = std::cos(p.theta) / std::sin(p.theta);
  const Complex eip = std::exp(kI * p.phi);

  DerivativeResiduals r;
  r.h = std::abs(psi(p.phi, p.theta, commutator(g.H, a)) - (-kI * d_phi));
  r.e = std::abs(psi(p.phi, p.theta, commutator(g.E, a)) + eip * (d_theta + kI * cot * d_phi));
  r.f = std::abs(psi(p.phi, p.theta, commutator(g.F, a)) - std::conj(eip) * (d_theta - kI * cot * d_phi));
  return r;
}

}  // namespace fuzzy
