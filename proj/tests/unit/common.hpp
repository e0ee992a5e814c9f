#pragma once

#include "fuzzy/fuzzy.hpp"

// glog, pulled in by Ceres, defines its own CHECK.
#undef CHECK
#include <catch_amalgamated.hpp>

namespace testing {

using namespace fuzzy;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

inline double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline ComplexMatrix diag(std::initializer_list<double> v) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) m(i, i) = x, ++i;
  return m;
}

inline HalfInt half(int twice) { return HalfInt::from_twice(twice); }

}  // namespace testing
