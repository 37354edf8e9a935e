#pragma once

#include <array>

#include "qcw/operator_core.hpp"

namespace qcw {

// Orthonormal single-qubit basis given by Bloch-sphere angles:
//   |0'> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
//   |1'> = -e^{-i phi} sin(theta/2)|0> + cos(theta/2)|1>
// Also used as the projective measurement basis on qubit b.
struct BlochAngles {
  double theta = 0.0;
  double phi = 0.0;

  Eigen::Vector2cd ket(int outcome) const;
  Mat2 projector(int outcome) const;
  // Unit Bloch vector of |0'>.
  Vec3 axis() const;
  // Same projectors with theta in [0, pi] and phi in [0, 2 pi).
  BlochAngles canonical() const;
};

using ProbabilityTable = std::array<std::array<double, 2>, 2>;

struct StateValidity {
  bool hermitian = false;
  bool trace_one = false;
  bool psd = false;
  double min_eigenvalue = 0.0;
  bool in_diagonal_class = false;  // off-diagonal correlations below tol::offdiagonal_correlation

  bool valid() const { return hermitian && trace_one && psd; }
};

StateValidity validate(const Mat4& m);

// (1/4)(I + x.sigma (x) I + I (x) y.sigma + sum_i c_i sigma_i (x) sigma_i)
DensityMatrix make_general(const Vec3& x, const Vec3& y, const Vec3& c);

DensityMatrix make_bell_diagonal(const Vec3& c);

// Closed-form spectrum of a Bell-diagonal operator, ordered as the Bell
// projectors |Psi->, |Phi+>, |Phi->, |Psi+>: (1 + s.c)/4 with sign vectors
// s in {(-,-,-), (+,-,+), (-,+,+), (+,+,-)}.
std::array<double, 4> bell_diagonal_spectrum(const Vec3& c);

// (1 - alpha) I/4 + alpha |Psi-><Psi-|, alpha in [0, 1].
DensityMatrix make_werner(double alpha);

Mat4 singlet_projector();

// sum_ij p_ij |a_i><a_i| (x) |b_j><b_j|
DensityMatrix make_classical(const ProbabilityTable& p, const BlochAngles& basis_a,
                             const BlochAngles& basis_b);

// rho_a (x) rho_b from Bloch vectors of norm <= 1.
DensityMatrix make_product(const Vec3& bloch_a, const Vec3& bloch_b);

}  // namespace qcw
