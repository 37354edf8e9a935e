#include "qcw/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace qcw {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NonHermitian: return "NonHermitian";
    case ErrorKind::OutOfClass: return "OutOfClass";
    case ErrorKind::ZeroProbabilityOutcome: return "ZeroProbabilityOutcome";
    case ErrorKind::OptimizerFailure: return "OptimizerFailure";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Mat2 pauli(int index) {
  const Complex i{0.0, 1.0};
  Mat2 m;
  switch (index) {
    case 0: m << 1.0, 0.0, 0.0, 1.0; break;
    case 1: m << 0.0, 1.0, 1.0, 0.0; break;
    case 2: m << 0.0, -i, i, 0.0; break;
    case 3: m << 1.0, 0.0, 0.0, -1.0; break;
    default:
      throw Error(ErrorKind::InvalidArgument,
                  "pauli index out of range: " + std::to_string(index));
  }
  return m;
}

Mat4 tensor(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

Mat4 pauli_product(int i, int j) { return tensor(pauli(i), pauli(j)); }

namespace {

// Precomputed sigma_i (x) sigma_j for the 16 index pairs.
const std::array<Mat4, 16>& pauli_table() {
  static const std::array<Mat4, 16> table = [] {
    std::array<Mat4, 16> t;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t[4 * i + j] = pauli_product(i, j);
    return t;
  }();
  return table;
}

// Tr(A B) without forming the product.
double trace_product_real(const Mat4& a, const Mat4& b) {
  return (a.transpose().cwiseProduct(b)).sum().real();
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const Mat4& m) {
  if (!m.allFinite()) throw Error(ErrorKind::InvalidState, "matrix has non-finite entries");
  const double herm = hermitian_residual(m);
  if (herm > tol::hermitian) {
    std::ostringstream os;
    os << "matrix is not Hermitian (residual " << herm << ")";
    throw Error(ErrorKind::InvalidState, os.str());
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > tol::trace) {
    std::ostringstream os;
    os << "trace is " << tr.real() << " (expected 1)";
    throw Error(ErrorKind::InvalidState, os.str());
  }
  const Mat4 sym = 0.5 * (m + m.adjoint());
  const double min_eig = eigenvalues_hermitian(sym)[3];
  if (min_eig < -tol::psd) {
    std::ostringstream os;
    os << "matrix is not positive semidefinite (min eigenvalue " << min_eig << ")";
    throw NotPositiveError(min_eig, os.str());
  }
  return DensityMatrix(sym);
}

PauliDecomposition decompose_operator(const Mat4& m) {
  const auto& table = pauli_table();
  PauliDecomposition d;
  for (int i = 1; i < 4; ++i) {
    d.x(i - 1) = trace_product_real(m, table[4 * i]);
    d.y(i - 1) = trace_product_real(m, table[i]);
    for (int j = 1; j < 4; ++j) d.T(i - 1, j - 1) = trace_product_real(m, table[4 * i + j]);
  }
  return d;
}

PauliDecomposition decompose(const DensityMatrix& rho) { return decompose_operator(rho.matrix()); }

Mat4 compose(const PauliDecomposition& d) {
  const auto& table = pauli_table();
  Mat4 m = table[0];
  for (int i = 1; i < 4; ++i) {
    m += d.x(i - 1) * table[4 * i];
    m += d.y(i - 1) * table[i];
    for (int j = 1; j < 4; ++j) m += d.T(i - 1, j - 1) * table[4 * i + j];
  }
  return 0.25 * m;
}

Mat2 partial_trace_operator(const Mat4& m, Subsystem keep) {
  Mat2 out = Mat2::Zero();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int k = 0; k < 2; ++k) {
        if (keep == Subsystem::A)
          out(r, c) += m(2 * r + k, 2 * c + k);
        else
          out(r, c) += m(2 * k + r, 2 * k + c);
      }
  return out;
}

Mat2 partial_trace(const DensityMatrix& rho, Subsystem keep) {
  return partial_trace_operator(rho.matrix(), keep);
}

std::array<double, 4> eigenvalues_hermitian(const Mat4& h) {
  const double herm = hermitian_residual(h);
  if (!(herm <= tol::hermitian_solver)) {
    std::ostringstream os;
    os << "eigenvalues_hermitian: input is not Hermitian (residual " << herm << ")";
    throw Error(ErrorKind::NonHermitian, os.str());
  }
  const Mat4 sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat4> solver(sym, Eigen::EigenvaluesOnly);
  std::array<double, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = solver.eigenvalues()(i);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::array<double, 2> eigenvalues_hermitian(const Mat2& h) {
  const double herm = hermitian_residual(h);
  if (!(herm <= tol::hermitian_solver)) {
    throw Error(ErrorKind::NonHermitian, "eigenvalues_hermitian: 2x2 input is not Hermitian");
  }
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const Complex b = 0.5 * (h(0, 1) + std::conj(h(1, 0)));
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(b));
  return {mean + radius, mean - radius};
}

double entropy_bits(std::span<const double> spectrum) {
  double s = 0.0;
  for (double p : spectrum) {
    p = std::clamp(p, 0.0, 1.0);
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto spectrum = eigenvalues_hermitian(rho.matrix());
  return entropy_bits(spectrum);
}

double von_neumann_entropy(const Mat2& rho) {
  if (hermitian_residual(rho) > tol::hermitian_solver)
    throw Error(ErrorKind::InvalidState, "single-qubit operator is not Hermitian");
  if (std::abs(rho.trace() - Complex{1.0, 0.0}) > tol::trace)
    throw Error(ErrorKind::InvalidState, "single-qubit operator does not have unit trace");
  const auto spectrum = eigenvalues_hermitian(rho);
  if (spectrum[1] < -tol::psd)
    throw NotPositiveError(spectrum[1], "single-qubit operator is not positive semidefinite");
  return entropy_bits(spectrum);
}

double expectation(const DensityMatrix& rho, const Mat4& observable) {
  if (hermitian_residual(observable) > tol::hermitian_solver)
    throw Error(ErrorKind::NonHermitian, "expectation: observable is not Hermitian");
  return trace_product_real(observable, rho.matrix());
}

Vec3 bloch_vector(const Mat2& rho) {
  Vec3 r;
  for (int i = 1; i < 4; ++i) r(i - 1) = (pauli(i) * rho).trace().real();
  return r;
}

Mat2 pauli_dot(const Vec3& n) {
  return n(0) * pauli(1) + n(1) * pauli(2) + n(2) * pauli(3);
}

Mat2 qubit_density(const Vec3& bloch) { return 0.5 * (pauli(0) + pauli_dot(bloch)); }

}  // namespace qcw
