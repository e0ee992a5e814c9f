#pragma once

// Dirac operators of the irreducible and full spectral triples on A_N = M_{N+1}(C).
//
// Irreducible triple: H_N = V_j (x) C^2, D_N = 1 + sum_k J_k (x) sigma_k.
// Full triple: H~_N = A_N (x) C^2 with A_N carrying the left regular
// representation; a matrix a is vectorised row-major, so E_{rc} sits at
// r * (N+1) + c and vec(x a y) = (x (x) y^T) vec(a).

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "fuzzy/random.hpp"
#include "fuzzy/su2.hpp"

namespace fuzzy {

enum class DiracKind { irreducible, full };

inline const char* to_string(DiracKind k) { return k == DiracKind::irreducible ? "irreducible" : "full"; }

/// Largest N for which the full operator is materialised as a dense matrix.
inline constexpr int kFullMaterializeCap = 16;

class DiracOperator {
 public:
  DiracOperator(DiracKind kind, SpinLabel spin, ComplexMatrix matrix)
      : kind_(kind), spin_(spin), cache_(std::make_shared<Cache>(std::move(matrix))) {}

  DiracKind kind() const { return kind_; }
  const SpinLabel& spin() const { return spin_; }
  const ComplexMatrix& matrix() const { return cache_->matrix; }

  /// Eigendecomposition, computed once per operator (thread-safe).
  const EigenDecomposition& eigen() const {
    std::call_once(cache_->once, [c = cache_.get()] { c->eigen = hermitian_eigen(c->matrix); });
    return cache_->eigen;
  }

 private:
  struct Cache {
    explicit Cache(ComplexMatrix m) : matrix(std::move(m)) {}
    ComplexMatrix matrix;
    std::once_flag once;
    EigenDecomposition eigen;
  };
  DiracKind kind_;
  SpinLabel spin_;
  std::shared_ptr<Cache> cache_;
};

inline ComplexMatrix spinor_generator(int k) { return 0.5 * pauli(k); }

inline DiracOperator build_irreducible(const SpinLabel& spin) {
  const GeneratorSet g = generators(spin);
  const Eigen::Index n = spin.dim();
  ComplexMatrix d = identity(2 * n);
  for (int k = 1; k <= 3; ++k) d += kron(g.J(k), pauli(k));
  return {DiracKind::irreducible, spin, d};
}

/// Superoperator a -> [x, a] on row-major vec(a).
inline ComplexMatrix adjoint_action(const ComplexMatrix& x) {
  const Eigen::Index n = x.rows();
  return kron(x, identity(n)) - kron(identity(n), ComplexMatrix(x.transpose()));
}

/// Superoperator a -> x a on row-major vec(a).
inline ComplexMatrix left_multiplication(const ComplexMatrix& x) { return kron(x, identity(x.rows())); }

inline void check_full_cap(const SpinLabel& spin) {
  if (spin.N() > kFullMaterializeCap) {
    const long long n = spin.N() + 1;
    throw ContractViolation("build_full: N = " + std::to_string(spin.N()) +
                            " would materialise a dense matrix of dimension " +
                            std::to_string(2 * n * n) + "; cap is N <= " +
                            std::to_string(kFullMaterializeCap));
  }
}

inline DiracOperator build_full(const SpinLabel& spin) {
  check_full_cap(spin);
  const GeneratorSet g = generators(spin);
  const Eigen::Index n = spin.dim();
  ComplexMatrix d = identity(2 * n * n);
  for (int k = 1; k <= 3; ++k) d += kron(adjoint_action(g.J(k)), pauli(k));
  return {DiracKind::full, spin, d};
}

/// Spectrum of the full operator, block by block in the weight sectors of
/// ad(J_3) (x) 1 + 1 (x) sigma_3 / 2. The dense operator is never formed, so
/// this scales to N of several dozen.
inline RealVector full_spectrum_by_sectors(const SpinLabel& spin) {
  const GeneratorSet g = generators(spin);
  const int n = static_cast<int>(spin.dim());
  // Twice the total weight of E_{rc} (x) e_s: 2(m_r - m_c) + (s == 0 ? 1 : -1).
  auto weight2 = [&](int r, int c, int s) { return 2 * (r - c) + (s == 0 ? 1 : -1); };
  std::map<int, std::vector<int>> sectors;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int s = 0; s < 2; ++s) sectors[weight2(r, c, s)].push_back((r * n + c) * 2 + s);

  const std::array<ComplexMatrix, 4> sig{ComplexMatrix(), pauli(1), pauli(2), pauli(3)};
  std::vector<double> all;
  all.reserve(static_cast<std::size_t>(2 * n * n));
  // The J_1 and J_2 terms leave a sector individually; only their sum stays
  // inside, so each column is accumulated densely and then gathered.
  std::vector<Complex> column(static_cast<std::size_t>(2 * n * n), Complex(0.0));
  std::vector<int> touched;
  for (const auto& [w, members] : sectors) {
    const auto dim = static_cast<Eigen::Index>(members.size());
    ComplexMatrix block = ComplexMatrix::Identity(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
      const int idx = members[static_cast<std::size_t>(col)];
      const int s = idx % 2;
      const int r = (idx / 2) / n;
      const int c = (idx / 2) % n;
      auto add = [&](int target, Complex v) {
        Complex& slot = column[static_cast<std::size_t>(target)];
        if (slot == Complex(0.0)) touched.push_back(target);
        slot += v;
      };
      // D~ (E_rc (x) e_s) = E_rc (x) e_s + sum_k [J_k, E_rc] (x) sigma_k e_s.
      for (int k = 1; k <= 3; ++k) {
        const ComplexMatrix& jk = g.J(k);
        for (int s2 = 0; s2 < 2; ++s2) {
          const Complex sv = sig[static_cast<std::size_t>(k)](s2, s);
          if (sv == Complex(0.0)) continue;
          for (int r2 = 0; r2 < n; ++r2)  // J_k E_rc = sum_r2 (J_k)_{r2 r} E_{r2 c}
            if (jk(r2, r) != Complex(0.0)) add((r2 * n + c) * 2 + s2, jk(r2, r) * sv);
          for (int c2 = 0; c2 < n; ++c2)  // E_rc J_k = sum_c2 (J_k)_{c c2} E_{r c2}
            if (jk(c, c2) != Complex(0.0)) add((r * n + c2) * 2 + s2, -jk(c, c2) * sv);
        }
      }
      for (Eigen::Index i = 0; i < dim; ++i) block(i, col) += column[static_cast<std::size_t>(members[i])];
      for (int t : touched) column[static_cast<std::size_t>(t)] = Complex(0.0);
      touched.clear();
    }
    const RealVector ev = hermitian_eigenvalues(block);
    for (Eigen::Index i = 0; i < ev.size(); ++i) all.push_back(ev(i));
  }
  std::sort(all.begin(), all.end());
  return Eigen::Map<RealVector>(all.data(), static_cast<Eigen::Index>(all.size()));
}

struct SpectrumEntry {
  double value = 0.0;
  int multiplicity = 0;
  bool operator==(const SpectrumEntry&) const = default;
};

/// Groups ascending eigenvalues whose successive gaps are below `tol`.
inline std::vector<SpectrumEntry> bin_spectrum(const RealVector& eigenvalues,
                                               double tol = Tolerances::spectrum_bin) {
  std::vector<double> ev(eigenvalues.data(), eigenvalues.data() + eigenvalues.size());
  std::sort(ev.begin(), ev.end());
  std::vector<SpectrumEntry> out;
  double sum = 0.0;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (out.empty() || ev[i] - ev[i - 1] > tol) {
      if (!out.empty()) out.back().value = sum / out.back().multiplicity;
      out.push_back({ev[i], 0});
      sum = 0.0;
    }
    ++out.back().multiplicity;
    sum += ev[i];
  }
  if (!out.empty()) out.back().value = sum / out.back().multiplicity;
  return out;
}

/// Closed-form spectrum: {-j x 2j, j+1 x 2j+2} (irreducible) or
/// {+-l x 2l for l = 1..N, N+1 x 2N+2} (full).
inline std::vector<SpectrumEntry> predicted_spectrum(DiracKind kind, const SpinLabel& spin) {
  const int N = spin.N();
  if (kind == DiracKind::irreducible) return {{-spin.j(), N}, {spin.j() + 1.0, N + 2}};
  std::vector<SpectrumEntry> out;
  for (int l = N; l >= 1; --l) out.push_back({-static_cast<double>(l), 2 * l});
  for (int l = 1; l <= N; ++l) out.push_back({static_cast<double>(l), 2 * l});
  out.push_back({static_cast<double>(N + 1), 2 * N + 2});
  return out;
}

/// Largest deviation between sorted eigenvalues and the predicted multiset;
/// +inf if the dimensions differ.
inline double spectrum_deviation(const RealVector& eigenvalues, const std::vector<SpectrumEntry>& predicted) {
  std::vector<double> expect;
  for (const auto& e : predicted) expect.insert(expect.end(), static_cast<std::size_t>(e.multiplicity), e.value);
  std::sort(expect.begin(), expect.end());
  if (static_cast<Eigen::Index>(expect.size()) != eigenvalues.size()) return std::numeric_limits<double>::infinity();
  std::vector<double> got(eigenvalues.data(), eigenvalues.data() + eigenvalues.size());
  std::sort(got.begin(), got.end());
  double dev = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) dev = std::max(dev, std::abs(got[i] - expect[i]));
  return dev;
}

struct EigenspinorBasis {
  std::vector<ComplexVector> plus;   // m = -j-1 .. j, eigenvalue j + 1
  std::vector<ComplexVector> minus;  // m = -j .. j-1, eigenvalue -j
};

/// Closed-form orthonormal eigenbasis of D_N. Kets |j,m> with |m| > j are
/// taken to be zero, which is what makes the m = -j-1 and m = j cases work.
inline EigenspinorBasis eigenspinors(const SpinLabel& spin) {
  const Eigen::Index n = spin.dim();
  const double j = spin.j();
  const double denom = 2.0 * j + 1.0;
  auto ket = [&](Eigen::Index idx, int s) {
    ComplexVector v = ComplexVector::Zero(2 * n);
    if (idx >= 0 && idx < n) v(idx * 2 + s) = 1.0;
    return v;
  };
  EigenspinorBasis basis;
  for (int t = -spin.N() - 2; t <= spin.N(); t += 2) {  // t = 2m
    const double m = 0.5 * t;
    const auto idx = static_cast<Eigen::Index>(std::lround(m + j));
    basis.plus.push_back(std::sqrt((j + m + 1.0) / denom) * ket(idx, 0) +
                         std::sqrt((j - m) / denom) * ket(idx + 1, 1));
  }
  for (int t = -spin.N(); t <= spin.N() - 2; t += 2) {
    const double m = 0.5 * t;
    const auto idx = static_cast<Eigen::Index>(std::lround(m + j));
    basis.minus.push_back(-std::sqrt((j - m) / denom) * ket(idx, 0) +
                          std::sqrt((j + m + 1.0) / denom) * ket(idx + 1, 1));
  }
  return basis;
}

struct FullEigenspinor {
  int ell = 0;
  int m = 0;
  double eigenvalue = 0.0;
  ComplexVector vector;  // unit norm in A_N (x) C^2
};

/// Eigenspinors of the full operator assembled from pairs of fuzzy harmonics.
inline std::vector<FullEigenspinor> full_eigenspinors(const SpinLabel& spin) {
  const Eigen::Index n = spin.dim();
  auto harmonic = [&](int ell, int m) -> ComplexMatrix {
    if (std::abs(m) > ell) return ComplexMatrix::Zero(n, n);
    return fuzzy_harmonic(spin, ell, m).matrix;
  };
  auto pack = [&](const ComplexMatrix& top, const ComplexMatrix& bottom) {
    ComplexVector v(2 * n * n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) {
        v((r * n + c) * 2) = top(r, c);
        v((r * n + c) * 2 + 1) = bottom(r, c);
      }
    return v;
  };
  std::vector<FullEigenspinor> out;
  for (int ell = 0; ell <= spin.N(); ++ell) {
    const double s = 1.0 / std::sqrt(2.0 * ell + 1.0);
    for (int m = -ell - 1; m <= ell; ++m) {
      ComplexVector v = pack(s * std::sqrt(ell + m + 1.0) * harmonic(ell, m),
                             s * std::sqrt(static_cast<double>(ell - m)) * harmonic(ell, m + 1));
      out.push_back({ell, m, ell + 1.0, v / v.norm()});
    }
    for (int m = -ell; m <= ell - 1; ++m) {
      ComplexVector v = pack(-s * std::sqrt(static_cast<double>(ell - m)) * harmonic(ell, m),
                             s * std::sqrt(ell + m + 1.0) * harmonic(ell, m + 1));
      out.push_back({ell, m, -static_cast<double>(ell), v / v.norm()});
    }
  }
  return out;
}

/// [D_N, a (x) 1_2] = sum_k [J_k, a] (x) sigma_k.
inline ComplexMatrix dirac_commutator(const GeneratorSet& g, const ComplexMatrix& a) {
  ComplexMatrix out = ComplexMatrix::Zero(2 * a.rows(), 2 * a.cols());
  for (int k = 1; k <= 3; ++k) out += kron(commutator(g.J(k), a), pauli(k));
  return out;
}

inline void check_algebra_element(const SpinLabel& spin, const ComplexMatrix& a, const char* where) {
  if (a.rows() != spin.dim() || a.cols() != spin.dim())
    throw ContractViolation(std::string(where) + ": expected a " + std::to_string(spin.dim()) + "x" +
                            std::to_string(spin.dim()) + " matrix, got " + std::to_string(a.rows()) +
                            "x" + std::to_string(a.cols()));
}

/// ||[D, a]|| for either triple. For the full triple [D~_N, a] is left
/// multiplication by [D_N, a], so both kinds reduce to the same small matrix.
inline double commutator_seminorm(const SpinLabel& spin, const ComplexMatrix& a,
                                  DiracKind kind = DiracKind::irreducible) {
  check_algebra_element(spin, a, "commutator_seminorm");
  static_cast<void>(kind);
  const ComplexMatrix c = dirac_commutator(generators(spin), a);
  if (c.isZero(0.0)) return 0.0;
  return operator_norm(c);
}

/// ||[D~_N, L_a]|| with the full operator and the left-regular representation
/// both materialised. Test-scale only (N <= kFullMaterializeCap).
inline double full_commutator_seminorm_explicit(const DiracOperator& full, const ComplexMatrix& a) {
  if (full.kind() != DiracKind::full) throw ContractViolation("expected the full Dirac operator");
  check_algebra_element(full.spin(), a, "full_commutator_seminorm_explicit");
  const ComplexMatrix rep = kron(left_multiplication(a), identity(2));
  return operator_norm(commutator(full.matrix(), rep));
}

struct RealStructureReport {
  double j_squared = 0.0;        // ||J~^2 + 1||
  double antiunitarity = 0.0;    // max |<Jx, Jy> - <y, x>|
  double commutes_with_d = 0.0;  // ||J~ D~ - D~ J~||
  double order_zero = 0.0;       // max ||[a, J~ b J~^-1]||
  double order_one = 0.0;        // max ||[[D~, a], J~ b J~^-1]||
  int samples = 0;
  double max_residual() const {
    return std::max({j_squared, antiunitarity, commutes_with_d, order_zero, order_one});
  }
};

/// J~ acts as psi -> M conj(psi) with M = P (x) sigma_2, P the transpose permutation.
inline ComplexMatrix real_structure_matrix(const SpinLabel& spin) {
  const Eigen::Index n = spin.dim();
  ComplexMatrix p = ComplexMatrix::Zero(n * n, n * n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) p(c * n + r, r * n + c) = 1.0;
  return kron(p, pauli(2));
}

inline RealStructureReport real_structure_check(const SpinLabel& spin, int samples = 50,
                                                std::uint64_t seed = 1) {
  const DiracOperator full = build_full(spin);
  const ComplexMatrix& d = full.matrix();
  const ComplexMatrix m = real_structure_matrix(spin);
  const Eigen::Index dim = d.rows();
  const Eigen::Index n = spin.dim();
  RealStructureReport rep;
  rep.samples = samples;
  rep.j_squared = (m * m.conjugate() + identity(dim)).cwiseAbs().maxCoeff();
  rep.commutes_with_d = (m * d.conjugate() - d * m).cwiseAbs().maxCoeff();

  Rng rng(seed);
  // J~ B J~^-1 = -M conj(B) conj(M) for a linear operator B.
  auto conjugated = [&](const ComplexMatrix& b) -> ComplexMatrix {
    return -m * b.conjugate() * m.conjugate();
  };
  for (int s = 0; s < samples; ++s) {
    const ComplexVector x = random_complex(dim, 1, rng);
    const ComplexVector y = random_complex(dim, 1, rng);
    const Complex lhs = (m * x.conjugate()).dot(m * y.conjugate());
    const Complex rhs = y.dot(x);
    rep.antiunitarity = std::max(rep.antiunitarity, std::abs(lhs - rhs) / (x.norm() * y.norm()));

    const ComplexMatrix a = random_complex(n, n, rng);
    const ComplexMatrix b = random_complex(n, n, rng);
    const ComplexMatrix la = kron(left_multiplication(a), identity(2));
    const ComplexMatrix jb = conjugated(kron(left_multiplication(b), identity(2)));
    const double scale = std::max(1.0, a.norm() * b.norm());
    rep.order_zero = std::max(rep.order_zero, (la * jb - jb * la).cwiseAbs().maxCoeff() / scale);
    const ComplexMatrix da = d * la - la * d;
    rep.order_one = std::max(rep.order_one, (da * jb - jb * da).cwiseAbs().maxCoeff() / scale);
  }
  return rep;
}

/// Isometries U+ : V_{j+1/2} -> V_j (x) C^2 and U- : V_{j-1/2} -> V_j (x) C^2,
/// column k of U+ (resp. U-) being the k-th plus (minus) eigenspinor.
struct Isometries {
  ComplexMatrix plus;
  ComplexMatrix minus;
};

inline Isometries embed_isometries(const SpinLabel& spin) {
  const EigenspinorBasis b = eigenspinors(spin);
  const Eigen::Index dim = 2 * spin.dim();
  Isometries u{ComplexMatrix(dim, static_cast<Eigen::Index>(b.plus.size())),
               ComplexMatrix(dim, static_cast<Eigen::Index>(b.minus.size()))};
  for (std::size_t k = 0; k < b.plus.size(); ++k) u.plus.col(static_cast<Eigen::Index>(k)) = b.plus[k];
  for (std::size_t k = 0; k < b.minus.size(); ++k) u.minus.col(static_cast<Eigen::Index>(k)) = b.minus[k];
  return u;
}

enum class EtaSign { plus, minus };

/// eta^{+-}(a) = (U^{+-})^dagger (a (x) 1_2) U^{+-}, an (N+1 +- 1)-square matrix.
inline ComplexMatrix eta_map(const SpinLabel& spin, const ComplexMatrix& a, EtaSign sign) {
  check_algebra_element(spin, a, "eta_map");
  const Isometries u = embed_isometries(spin);
  const ComplexMatrix& iso = sign == EtaSign::plus ? u.plus : u.minus;
  return iso.adjoint() * kron(a, identity(2)) * iso;
}

}  // namespace fuzzy
