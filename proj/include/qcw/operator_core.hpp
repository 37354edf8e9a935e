#pragma once

#include <array>
#include <span>

#include "qcw/types.hpp"

namespace qcw {

// Pauli matrix by index: 0 = identity, 1..3 = sigma_x, sigma_y, sigma_z.
Mat2 pauli(int index);

// Kronecker product; qubit a is the high bit: (A (x) B)[2i+k, 2j+l] = A[i,j] B[k,l].
Mat4 tensor(const Mat2& a, const Mat2& b);

// sigma_i (x) sigma_j, both indices in 0..3.
Mat4 pauli_product(int i, int j);

template <typename Derived>
double hermitian_residual(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// A validated two-qubit state: Hermitian, unit trace, positive semidefinite.
// Immutable once constructed.
class DensityMatrix {
 public:
  // Throws Error(InvalidState) for non-Hermitian or non-unit-trace input and
  // NotPositiveError when the smallest eigenvalue is below -tol::psd.
  static DensityMatrix from_matrix(const Mat4& m);

  const Mat4& matrix() const noexcept { return matrix_; }
  const Complex& operator()(int row, int col) const { return matrix_(row, col); }

 private:
  explicit DensityMatrix(const Mat4& m) : matrix_(m) {}
  Mat4 matrix_;
};

struct PauliDecomposition {
  Vec3 x = Vec3::Zero();  // Bloch vector of qubit a
  Vec3 y = Vec3::Zero();  // Bloch vector of qubit b
  Mat3 T = Mat3::Zero();  // T(i,j) = Tr(rho sigma_i (x) sigma_j)

  Vec3 diagonal() const { return T.diagonal(); }
};

PauliDecomposition decompose(const DensityMatrix& rho);
// Same traces on an arbitrary (possibly invalid) operator; used by validation.
PauliDecomposition decompose_operator(const Mat4& m);

Mat4 compose(const PauliDecomposition& d);

Mat2 partial_trace(const DensityMatrix& rho, Subsystem keep);
Mat2 partial_trace_operator(const Mat4& m, Subsystem keep);

// Real eigenvalues in descending order. Input must be Hermitian to
// tol::hermitian_solver; it is symmetrized before the solve.
std::array<double, 4> eigenvalues_hermitian(const Mat4& h);
std::array<double, 2> eigenvalues_hermitian(const Mat2& h);

// -sum p log2 p over a spectrum already checked against the PSD tolerance.
// Values are clipped to [0, 1] first.
double entropy_bits(std::span<const double> spectrum);

double von_neumann_entropy(const DensityMatrix& rho);
// Single-qubit density operator; validated (Hermitian, unit trace, PSD).
double von_neumann_entropy(const Mat2& rho);

double expectation(const DensityMatrix& rho, const Mat4& observable);

// r_i = Tr(rho sigma_i) for a single-qubit operator.
Vec3 bloch_vector(const Mat2& rho);

// (I + r.sigma) / 2
Mat2 qubit_density(const Vec3& bloch);

// n.sigma for an arbitrary real vector.
Mat2 pauli_dot(const Vec3& n);

}  // namespace qcw
