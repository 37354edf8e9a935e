#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace qcw {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix<Complex, 2, 2>;
using Mat4 = Eigen::Matrix<Complex, 4, 4>;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

enum class Subsystem { A, B };

enum class ErrorKind {
  InvalidArgument,
  InvalidState,
  NotPositive,
  NonHermitian,
  OutOfClass,
  ZeroProbabilityOutcome,
  OptimizerFailure,
  Parse,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this exception; `kind` lets
// callers (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by constructors when the requested parameters give a matrix with a
// negative eigenvalue below the PSD tolerance.
class NotPositiveError : public Error {
 public:
  NotPositiveError(double min_eigenvalue, const std::string& what)
      : Error(ErrorKind::NotPositive, what), min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

namespace tol {
inline constexpr double hermitian = 1e-12;
inline constexpr double trace = 1e-12;
inline constexpr double psd = 1e-10;
inline constexpr double hermitian_solver = 1e-10;
inline constexpr double offdiagonal_correlation = 1e-9;
inline constexpr double witness_zero = 1e-9;
inline constexpr double bell_diagonal = 1e-9;
inline constexpr double unit_norm = 1e-12;
inline constexpr double zero_probability = 1e-12;
}  // namespace tol

}  // namespace qcw
