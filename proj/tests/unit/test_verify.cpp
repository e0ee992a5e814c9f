#include "common.hpp"

using namespace testing;

TEST_CASE("spectra suite") {
  const SuiteReport r = verify_spectra(8);
  CHECK(r.passed());
  CHECK(r.checks.size() == 8 + 2 * 6);
}

TEST_CASE("metric equivalence suite") { CHECK(verify_metric_equivalence(5, 1).passed()); }

TEST_CASE("real structure suite") { CHECK(verify_real_structure(4, 1).passed()); }

TEST_CASE("monotonicity suite") { CHECK(verify_monotonicity(3, 7).passed()); }

TEST_CASE("unknown suite is rejected") {
  CHECK_THROWS_AS(run_suite("nope", 3, 0), ContractViolation);
  CHECK_THROWS_AS(run_suite("spectra", 0, 0), ContractViolation);
}

TEST_CASE("informational checks never fail a suite") {
  SuiteReport r{"x", {}, 0.0};
  Check c{"x", "note", 0, 1.0, 0.0};
  c.informational = true;
  r.checks.push_back(c);
  CHECK(r.passed());
  r.checks.push_back({"x", "real", 0, 1.0, 0.5});
  CHECK_FALSE(r.passed());
  CHECK(r.failures() == 1);
}
