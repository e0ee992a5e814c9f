#include "common.hpp"

using namespace testing;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("geodesic distance") {
  const BlochPoint p{0.3, 1.0};
  CHECK(geodesic_distance(p, p) == 0.0);
  CHECK_THAT(geodesic_distance({0.0, 0.0}, {0.0, pi}), WithinAbs(pi, 1e-15));
  CHECK_THAT(geodesic_distance({0.0, pi / 2}, {pi / 2, pi / 2}), WithinAbs(pi / 2, 1e-15));
}

TEST_CASE("rho sweep rows") {
  const auto rows = rho_sweep({{30, 10, 500}, 64});
  REQUIRE(rows.size() == 3 * 64);
  CHECK(rows.front().N == 10);
  CHECK(rows.back().N == 500);
  CHECK(rows.front().theta == 0.0);
  CHECK(rows[63].theta == pi);
  for (const auto& r : rows) {
    CHECK(r.rho >= 0.0);
    CHECK(r.rho <= r.theta);
    CHECK_THAT(r.theta_over_pi, WithinAbs(r.theta / pi, 1e-16));
    CHECK(r.deficit == r.theta - r.rho);
  }
  CHECK(rows[63].rho == diameter(SpinLabel(10)).value);
  CHECK(rows.back().rho >= 2.0 * std::asin(499.0 / 501.0));
  CHECK_THROWS_AS(rho_sweep({{5}, 1}), ContractViolation);
  CHECK_THROWS_AS(rho_sweep({{}, 4}), ContractViolation);
}

TEST_CASE("sweep monotonicity, N = 1..30") {
  for (int N = 1; N <= 30; ++N) {
    const auto a = rho_sweep({{N}, 64});
    const auto b = rho_sweep({{N + 1}, 64});
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].rho <= a[i].theta);
      CHECK(b[i].rho >= a[i].rho);
      CHECK(b[i].deficit <= a[i].deficit);
      if (i > 0) {
        CHECK(a[i].rho - a[i - 1].rho > -1e-14);
        CHECK(a[i].deficit >= a[i - 1].deficit);
      }
    }
  }
}

TEST_CASE("arcsin bound") {
  CHECK(arcsin_bound(1) == 0.0);
  CHECK_THAT(arcsin_bound(11), WithinAbs(1.9702215666754913, 1e-14));
  CHECK_THAT(arcsin_bound(499), WithinAbs(2.9626475331808039, 1e-13));
  for (int N = 1; N <= 501; N += 2) CHECK(arcsin_bound(N) <= diameter(SpinLabel(N)).value);
  CHECK(diameter(SpinLabel(501)).value >= 3.00);
  CHECK_THROWS_AS(arcsin_bound(0), ContractViolation);
}

TEST_CASE("uniform deficit") {
  double prev = uniform_deficit(1);
  for (int N = 2; N <= 100; ++N) {
    const double d = uniform_deficit(N);
    CHECK(d <= prev);
    prev = d;
  }
  CHECK_THAT(uniform_deficit(100), WithinAbs(0.29082640181838316, 1e-13));
  CHECK_THAT(uniform_deficit(500), WithinAbs(0.1305061973077834, 1e-12));
  CHECK(uniform_deficit(500) <= pi - 2.0 * std::asin(499.0 / 501.0));
  for (int N : {5, 10, 20, 30}) {
    const auto rows = rho_sweep({{N}, 257});
    double best = 0.0;
    for (const auto& r : rows) best = std::max(best, r.deficit);
    CHECK(best == rows.back().deficit);
    CHECK(best <= uniform_deficit(N) + 1e-12);
  }
}

TEST_CASE("N = 1 distances relative to rho_1") {
  for (int i = 0; i <= 20; ++i) {
    const double theta = pi * i / 20.0;
    const double rho = rho_closed(SpinLabel(1), theta).value;
    const double d1 = d1_ball(ball_point({0.0, theta}), ball_point({0.0, 0.0})).value;
    CHECK(rho <= d1 + 1e-15);
    if (i == 0 || i == 20) CHECK_THAT(rho, WithinAbs(d1, 1e-15));
    else CHECK(rho < d1);
  }
}
