#pragma once

#include <stdexcept>
#include <string>

namespace fuzzy {

#ifdef FUZZY_VERSION_STRING
inline constexpr const char* kVersion = FUZZY_VERSION_STRING;
#else
inline constexpr const char* kVersion = "1.0.0";
#endif

/// Numerical tolerances shared by every module.
struct Tolerances {
  /// Relative hermiticity slack: max|M - M^dagger| <= herm * max(1, |M|_F).
  static constexpr double hermitian = 1e-12;
  /// Relative reconstruction error allowed for an eigendecomposition.
  static constexpr double reconstruction = 1e-10;
  /// Absolute width used to bin eigenvalues into multiplicities.
  static constexpr double spectrum_bin = 1e-6;
  /// Trace / positivity slack for density matrices.
  static constexpr double state = 1e-12;
  /// Slack allowed on |x| <= 1 for Bloch-ball vectors.
  static constexpr double ball = 1e-12;
};

/// A precondition of the called operation was violated by the caller.
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// An index or label lies outside the range the operation is defined on.
class OutOfRange : public std::out_of_range {
 public:
  explicit OutOfRange(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace fuzzy
