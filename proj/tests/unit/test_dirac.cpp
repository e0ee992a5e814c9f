#include "common.hpp"

using namespace testing;

namespace {

std::vector<SpectrumEntry> entries(std::initializer_list<std::pair<double, int>> v) {
  std::vector<SpectrumEntry> out;
  for (const auto& [x, m] : v) out.push_back({x, m});
  return out;
}

void check_binned(const RealVector& ev, const std::vector<SpectrumEntry>& expect) {
  const auto got = bin_spectrum(ev);
  REQUIRE(got.size() == expect.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK_THAT(got[i].value, WithinAbs(expect[i].value, 1e-9));
    CHECK(got[i].multiplicity == expect[i].multiplicity);
  }
}

}  // namespace

TEST_CASE("irreducible spectrum examples") {
  check_binned(build_irreducible(SpinLabel(1)).eigen().eigenvalues, entries({{-0.5, 1}, {1.5, 3}}));
  check_binned(build_irreducible(SpinLabel(4)).eigen().eigenvalues, entries({{-2.0, 4}, {3.0, 6}}));
  for (int N = 1; N <= 12; ++N) {
    const SpinLabel s(N);
    const DiracOperator d = build_irreducible(s);
    CHECK(d.matrix().rows() == 2 * (N + 1));
    CHECK_THAT(d.matrix().trace().real(), WithinAbs(2.0 * (N + 1), 1e-12));
    CHECK(spectrum_deviation(d.eigen().eigenvalues, predicted_spectrum(DiracKind::irreducible, s)) <= 1e-9);
  }
}

TEST_CASE("irreducible block form and Casimir identity") {
  for (int N = 1; N <= 8; ++N) {
    const SpinLabel s(N);
    const GeneratorSet g = generators(s);
    const ComplexMatrix d = build_irreducible(s).matrix();
    const Eigen::Index n = s.dim();
    // Reorder to spin-outer blocks [[1+H, F], [E, 1-H]].
    ComplexMatrix blocks(2 * n, 2 * n);
    for (Eigen::Index a = 0; a < 2; ++a)
      for (Eigen::Index b = 0; b < 2; ++b)
        for (Eigen::Index r = 0; r < n; ++r)
          for (Eigen::Index c = 0; c < n; ++c) blocks(a * n + r, b * n + c) = d(r * 2 + a, c * 2 + b);
    CHECK(max_abs(blocks.topLeftCorner(n, n) - (identity(n) + g.H)) <= 1e-14);
    CHECK(max_abs(blocks.topRightCorner(n, n) - g.F) <= 1e-14);
    CHECK(max_abs(blocks.bottomLeftCorner(n, n) - g.E) <= 1e-14);
    CHECK(max_abs(blocks.bottomRightCorner(n, n) - (identity(n) - g.H)) <= 1e-14);

    ComplexMatrix cas = ComplexMatrix::Zero(2 * n, 2 * n);
    for (int k = 1; k <= 3; ++k) {
      const ComplexMatrix t = kron(g.J(k), identity(2)) + kron(identity(n), spinor_generator(k));
      cas += t * t;
    }
    CHECK(max_abs(d * d - cas - 0.25 * identity(2 * n)) <= 1e-9);
    CHECK(max_abs(d - cas + (s.j() * (s.j() + 1.0) - 0.25) * identity(2 * n)) <= 1e-9);
  }
}

TEST_CASE("D_N is equivariant") {
  for (int N = 1; N <= 8; ++N) {
    const SpinLabel s(N);
    const GeneratorSet g = generators(s);
    const ComplexMatrix d = build_irreducible(s).matrix();
    const ComplexMatrix h = kron(g.H, identity(2)) + kron(identity(s.dim()), spinor_generator(3));
    const ComplexMatrix e = kron(g.E, identity(2)) + kron(identity(s.dim()), spinor_generator(1) + kI * spinor_generator(2));
    const ComplexMatrix f = e.adjoint();
    CHECK(max_abs(commutator(d, h)) <= 1e-10);
    CHECK(max_abs(commutator(d, e)) <= 1e-10);
    CHECK(max_abs(commutator(d, f)) <= 1e-10);
  }
}

TEST_CASE("full spectrum examples") {
  const DiracOperator d1 = build_full(SpinLabel(1));
  CHECK(d1.matrix().rows() == 8);
  check_binned(d1.eigen().eigenvalues, entries({{-1, 2}, {1, 2}, {2, 4}}));
  check_binned(build_full(SpinLabel(2)).eigen().eigenvalues, entries({{-2, 4}, {-1, 2}, {1, 2}, {2, 4}, {3, 6}}));
  for (int N = 1; N <= 6; ++N) {
    const SpinLabel s(N);
    const RealVector ev = build_full(s).eigen().eigenvalues;
    const auto predicted = predicted_spectrum(DiracKind::full, s);
    CHECK(spectrum_deviation(ev, predicted) <= 1e-9);
    CHECK(spectrum_deviation(full_spectrum_by_sectors(s), predicted) <= 1e-9);
    CHECK(ev.cwiseAbs().minCoeff() >= 0.5);
    // Not symmetric under lambda -> -lambda.
    CHECK(spectrum_deviation(-ev, predicted) > 0.5);
  }
  CHECK(spectrum_deviation(full_spectrum_by_sectors(SpinLabel(20)), predicted_spectrum(DiracKind::full, SpinLabel(20))) <= 1e-9);
  CHECK_THROWS_AS(build_full(SpinLabel(kFullMaterializeCap + 1)), ContractViolation);
}

TEST_CASE("eigenspinors") {
  for (int N = 1; N <= 8; ++N) {
    const SpinLabel s(N);
    const ComplexMatrix d = build_irreducible(s).matrix();
    const EigenspinorBasis b = eigenspinors(s);
    CHECK(b.plus.size() + b.minus.size() == static_cast<std::size_t>(2 * (N + 1)));
    for (const auto& v : b.plus) CHECK((d * v - (s.j() + 1.0) * v).norm() <= 1e-10);
    for (const auto& v : b.minus) CHECK((d * v + s.j() * v).norm() <= 1e-10);
    const Isometries u = embed_isometries(s);
    ComplexMatrix all(2 * s.dim(), 2 * s.dim());
    all << u.plus, u.minus;
    CHECK(max_abs(all.adjoint() * all - identity(2 * s.dim())) <= 1e-10);
  }
  const SpinLabel s1(1);
  ComplexVector low = ComplexVector::Zero(4);
  low(1) = 1.0;  // |1/2,-1/2> (x) e_2
  CHECK((eigenspinors(s1).plus.front() - low).norm() <= 1e-15);
  const SpinLabel s2(2);
  ComplexVector mid = ComplexVector::Zero(6);
  mid(2) = std::sqrt(2.0 / 3.0);  // |1,0> (x) e_1
  mid(5) = std::sqrt(1.0 / 3.0);  // |1,1> (x) e_2
  CHECK((eigenspinors(s2).plus[2] - mid).norm() <= 1e-15);
}

TEST_CASE("full eigenspinors from fuzzy harmonics") {
  for (int N = 1; N <= 4; ++N) {
    const SpinLabel s(N);
    const ComplexMatrix d = build_full(s).matrix();
    const auto spinors = full_eigenspinors(s);
    CHECK(spinors.size() == static_cast<std::size_t>(2 * (N + 1) * (N + 1)));
    for (const auto& e : spinors) CHECK((d * e.vector - e.eigenvalue * e.vector).norm() <= 1e-10);
  }
}

TEST_CASE("commutator seminorm") {
  const SpinLabel s1(1);
  CHECK(commutator_seminorm(s1, identity(2)) == 0.0);
  Rng rng(8);
  std::normal_distribution<double> nd;
  const GeneratorSet g = generators(s1);
  for (int i = 0; i < 20; ++i) {
    const Eigen::Vector3d av(nd(rng), nd(rng), nd(rng));
    // a = a0 + a.sigma with sigma_k = 2 J_k in the ascending-m basis.
    const ComplexMatrix a = nd(rng) * identity(2) + 2.0 * (av.x() * g.J1 + av.y() * g.J2 + av.z() * g.J3);
    CHECK_THAT(commutator_seminorm(s1, a), WithinAbs(2.0 * av.norm(), 1e-12));
    CHECK_THAT(operator_norm(dirac_commutator(g, a)), WithinAbs(2.0 * av.norm(), 1e-12));
  }
  for (int N = 1; N <= 5; ++N) {
    const SpinLabel s(N);
    const DiracOperator full = build_full(s);
    for (int i = 0; i < 100; ++i) {
      const ComplexMatrix a = random_hermitian(s.dim(), rng);
      CHECK_THAT(full_commutator_seminorm_explicit(full, a), WithinAbs(commutator_seminorm(s, a, DiracKind::full), 1e-10));
    }
  }
  CHECK_THROWS_AS(commutator_seminorm(SpinLabel(2), identity(2)), ContractViolation);
}

TEST_CASE("commutator norm inequalities") {
  Rng rng(12);
  for (int N = 1; N <= 6; ++N) {
    const SpinLabel s(N);
    const GeneratorSet g = generators(s);
    for (int i = 0; i < 30; ++i) {
      const ComplexMatrix a = random_hermitian(s.dim(), rng);
      const double dn = commutator_seminorm(s, a);
      CHECK(operator_norm(commutator(g.H, a)) <= dn + 1e-10);
      CHECK(operator_norm(commutator(g.E, a)) <= dn + 1e-10);
      CHECK(operator_norm(commutator(g.F, a)) <= dn + 1e-10);
      ComplexMatrix diag_a = ComplexMatrix::Zero(s.dim(), s.dim());
      diag_a.diagonal() = a.diagonal().real().cast<Complex>();
      CHECK_THAT(commutator_seminorm(s, diag_a), WithinAbs(operator_norm(commutator(g.E, diag_a)), 1e-10));
    }
  }
}

TEST_CASE("real structure") {
  for (int N = 1; N <= 4; ++N) {
    const RealStructureReport r = real_structure_check(SpinLabel(N), 50, 3);
    CHECK(r.j_squared <= 1e-12);
    CHECK(r.antiunitarity <= 1e-12);
    CHECK(r.commutes_with_d <= 1e-12);
    CHECK(r.order_zero <= 1e-10);
    CHECK(r.order_one <= 1e-10);
  }
}

TEST_CASE("isometries and eta maps") {
  Rng rng(6);
  std::uniform_real_distribution<double> ang(-3.0, 3.0), th(0.0, std::numbers::pi);
  for (int N = 1; N <= 5; ++N) {
    const SpinLabel s(N), up(N + 1);
    const Isometries u = embed_isometries(s);
    CHECK(max_abs(u.plus.adjoint() * u.plus - identity(N + 2)) <= 1e-12);
    CHECK(max_abs(u.minus.adjoint() * u.minus - identity(N)) <= 1e-12);
    CHECK(max_abs(u.plus * u.plus.adjoint() + u.minus * u.minus.adjoint() - identity(2 * (N + 1))) <= 1e-12);

    const GeneratorSet g = generators(s), gp = generators(up);
    for (int k = 1; k <= 3; ++k) {
      const ComplexMatrix total = kron(g.J(k), identity(2)) + kron(identity(s.dim()), spinor_generator(k));
      CHECK(max_abs(u.plus * gp.J(k) - total * u.plus) <= 1e-10);
    }
    for (int i = 0; i < 10; ++i) {
      const BlochPoint p{ang(rng), th(rng)};
      const ComplexVector lhs = u.plus * bloch_vector(up, p);
      // C^2 is ordered (up, down); the level-1 Bloch vector is ascending in m.
      const ComplexVector b1 = bloch_vector(SpinLabel(1), p);
      const ComplexVector spinor = (ComplexVector(2) << b1(1), b1(0)).finished();
      const ComplexVector rhs = kron(bloch_vector(s, p), spinor);
      CHECK((lhs - rhs).norm() <= 1e-10);
    }

    CHECK(max_abs(eta_map(s, identity(s.dim()), EtaSign::plus) - identity(N + 2)) <= 1e-12);
    CHECK(max_abs(eta_map(s, identity(s.dim()), EtaSign::minus) - identity(N)) <= 1e-12);
    for (int i = 0; i < 100; ++i) {
      const ComplexMatrix a = random_hermitian(s.dim(), rng);
      const ComplexMatrix ep = eta_map(s, a, EtaSign::plus);
      CHECK(operator_norm(ep) <= operator_norm(a) + 1e-12);
      CHECK(is_hermitian(ep, 1e-10));
      const double base = commutator_seminorm(s, a);
      CHECK(commutator_seminorm(up, ep) <= base + 1e-10);
      if (N >= 2) {
        const ComplexMatrix em = eta_map(s, a, EtaSign::minus);
        CHECK(operator_norm(em) <= operator_norm(a) + 1e-12);
        CHECK(commutator_seminorm(SpinLabel(N - 1), em) <= base + 1e-10);
      }
    }
  }
}

TEST_CASE("cached eigendecomposition is shared and consistent across threads") {
  const DiracOperator d = build_irreducible(SpinLabel(10));
  std::vector<const EigenDecomposition*> seen(6, nullptr);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 6; ++t) pool.emplace_back([&, t] { seen[static_cast<std::size_t>(t)] = &d.eigen(); });
  }
  for (const auto* p : seen) CHECK(p == seen.front());
}
