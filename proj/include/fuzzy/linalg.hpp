#pragma once

// Dense complex linear algebra on top of Eigen.
//
// Tensor-product convention used across the whole library: in kron(A, B) the
// first factor indexes the outer blocks. Operators on V_j (x) C^2 are therefore
// stored with the V_j index outer and the spinor index inner, i.e. the basis
// vector |j,m> (x) e_s sits at position (m + j) * 2 + s.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "fuzzy/config.hpp"

namespace fuzzy {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

struct EigenDecomposition {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // columns, unitary
};

inline bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

/// max|M - M^dagger|, the entrywise hermiticity defect.
inline double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const ComplexMatrix& m, double rel_tol = Tolerances::hermitian) {
  if (m.rows() != m.cols()) return false;
  return hermiticity_defect(m) <= rel_tol * std::max(1.0, m.norm());
}

inline ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

/// Pauli matrix sigma_k, k = 1, 2, 3, in the basis e_1 = (1,0), e_2 = (0,1).
inline ComplexMatrix pauli(int k) {
  ComplexMatrix s(2, 2);
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -kI, kI, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw ContractViolation("pauli: index must be 1, 2 or 3");
  }
  return s;
}

inline EigenDecomposition hermitian_eigen(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << "hermitian_eigen: matrix is " << m.rows() << "x" << m.cols() << ", not square";
    throw ContractViolation(os.str());
  }
  if (!all_finite(m)) throw ContractViolation("hermitian_eigen: non-finite entries");
  if (!is_hermitian(m)) {
    std::ostringstream os;
    os << "hermitian_eigen: hermiticity defect " << hermiticity_defect(m);
    throw ContractViolation(os.str());
  }
  if (m.size() == 0) return {};
  // Householder tridiagonalisation followed by implicit symmetric QR.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) throw ContractViolation("hermitian_eigen: no convergence");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Eigenvalues only, ascending.
inline RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || !is_hermitian(m))
    throw ContractViolation("hermitian_eigenvalues: input is not hermitian");
  if (m.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

/// Largest singular value, computed as sqrt(lambda_max(M^dagger M)).
inline double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (!all_finite(m)) throw ContractViolation("operator_norm: non-finite entries");
  const ComplexMatrix gram = m.cols() <= m.rows() ? ComplexMatrix(m.adjoint() * m)
                                                  : ComplexMatrix(m * m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

/// max|eigenvalue| of a hermitian matrix, which equals its operator norm.
inline double hermitian_norm(const ComplexMatrix& m) {
  const RealVector ev = hermitian_eigenvalues(m);
  if (ev.size() == 0) return 0.0;
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    std::ostringstream os;
    os << "commutator: incompatible shapes " << a.rows() << "x" << a.cols() << " and "
       << b.rows() << "x" << b.cols();
    throw ContractViolation(os.str());
  }
  return a * b - b * a;
}

/// Kronecker product; the first factor indexes the outer blocks.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

/// Partial trace over the inner tensor factor of dimension `inner`.
inline ComplexMatrix partial_trace_inner(const ComplexMatrix& m, Eigen::Index inner) {
  if (inner <= 0 || m.rows() != m.cols() || m.rows() % inner != 0)
    throw ContractViolation("partial_trace_inner: dimension is not divisible by the inner factor");
  const Eigen::Index outer = m.rows() / inner;
  ComplexMatrix out = ComplexMatrix::Zero(outer, outer);
  for (Eigen::Index r = 0; r < outer; ++r)
    for (Eigen::Index c = 0; c < outer; ++c)
      for (Eigen::Index s = 0; s < inner; ++s) out(r, c) += m(r * inner + s, c * inner + s);
  return out;
}

/// Hermitian part (M + M^dagger) / 2.
inline ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace fuzzy
