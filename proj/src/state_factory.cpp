#include "qcw/state_factory.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

namespace qcw {

namespace {

void require_finite(const Vec3& v, const char* what) {
  if (!v.allFinite()) throw Error(ErrorKind::InvalidArgument, std::string(what) + " has non-finite entries");
}

}  // namespace

Eigen::Vector2cd BlochAngles::ket(int outcome) const {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const Complex phase = std::polar(1.0, phi);
  Eigen::Vector2cd v;
  if (outcome == 0)
    v << c, phase * s;
  else if (outcome == 1)
    v << -std::conj(phase) * s, c;
  else
    throw Error(ErrorKind::InvalidArgument, "outcome index must be 0 or 1");
  return v;
}

Mat2 BlochAngles::projector(int outcome) const {
  const Eigen::Vector2cd v = ket(outcome);
  return v * v.adjoint();
}

Vec3 BlochAngles::axis() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

BlochAngles BlochAngles::canonical() const {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  double p = phi;
  if (t > std::numbers::pi) {
    t = two_pi - t;
    p += std::numbers::pi;
  }
  p = std::fmod(p, two_pi);
  if (p < 0.0) p += two_pi;
  return {t, p};
}

StateValidity validate(const Mat4& m) {
  StateValidity v;
  if (!m.allFinite()) return v;
  const double herm = hermitian_residual(m);
  v.hermitian = herm <= tol::hermitian;
  v.trace_one = std::abs(m.trace() - Complex{1.0, 0.0}) <= tol::trace;
  if (herm <= tol::hermitian_solver) {
    v.min_eigenvalue = eigenvalues_hermitian(m)[3];
    v.psd = v.min_eigenvalue >= -tol::psd;
  } else {
    v.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  }
  const Mat3 T = decompose_operator(m).T;
  const Mat3 off = T - Mat3(T.diagonal().asDiagonal());
  v.in_diagonal_class = off.cwiseAbs().maxCoeff() <= tol::offdiagonal_correlation;
  return v;
}

DensityMatrix make_general(const Vec3& x, const Vec3& y, const Vec3& c) {
  require_finite(x, "x");
  require_finite(y, "y");
  require_finite(c, "c");
  PauliDecomposition d;
  d.x = x;
  d.y = y;
  d.T = c.asDiagonal();
  return DensityMatrix::from_matrix(compose(d));
}

std::array<double, 4> bell_diagonal_spectrum(const Vec3& c) {
  return {
      (1.0 - c(0) - c(1) - c(2)) / 4.0,
      (1.0 + c(0) - c(1) + c(2)) / 4.0,
      (1.0 - c(0) + c(1) + c(2)) / 4.0,
      (1.0 + c(0) + c(1) - c(2)) / 4.0,
  };
}

DensityMatrix make_bell_diagonal(const Vec3& c) {
  DensityMatrix rho = make_general(Vec3::Zero(), Vec3::Zero(), c);
#ifndef NDEBUG
  auto expected = bell_diagonal_spectrum(c);
  std::sort(expected.begin(), expected.end(), std::greater<>());
  const auto solved = eigenvalues_hermitian(rho.matrix());
  for (int i = 0; i < 4; ++i) assert(std::abs(expected[i] - solved[i]) < 1e-10);
#endif
  return rho;
}

Mat4 singlet_projector() {
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(1) = 1.0 / std::numbers::sqrt2;
  psi(2) = -1.0 / std::numbers::sqrt2;
  return psi * psi.adjoint();
}

DensityMatrix make_werner(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    std::ostringstream os;
    os << "werner weight out of range [0,1]: " << alpha;
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
  const Mat4 m = (1.0 - alpha) * Mat4::Identity() / 4.0 + alpha * singlet_projector();
  return DensityMatrix::from_matrix(m);
}

DensityMatrix make_classical(const ProbabilityTable& p, const BlochAngles& basis_a,
                             const BlochAngles& basis_b) {
  double total = 0.0;
  for (const auto& row : p)
    for (double v : row) {
      if (!std::isfinite(v) || v < 0.0)
        throw Error(ErrorKind::InvalidArgument, "probability table has a negative or non-finite entry");
      total += v;
    }
  if (std::abs(total - 1.0) > tol::trace)
    throw Error(ErrorKind::InvalidArgument, "probability table does not sum to 1");
  for (const BlochAngles* b : {&basis_a, &basis_b}) {
    if (!std::isfinite(b->theta) || !std::isfinite(b->phi))
      throw Error(ErrorKind::InvalidArgument, "basis angles must be finite");
    const Eigen::Vector2cd k0 = b->ket(0);
    const Eigen::Vector2cd k1 = b->ket(1);
    if (std::abs(k0.squaredNorm() - 1.0) > tol::unit_norm || std::abs(k1.squaredNorm() - 1.0) > tol::unit_norm ||
        std::abs(k0.dot(k1)) > tol::unit_norm)
      throw Error(ErrorKind::InvalidArgument, "basis is not orthonormal");
  }
  Mat4 m = Mat4::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m += p[i][j] * tensor(basis_a.projector(i), basis_b.projector(j));
  return DensityMatrix::from_matrix(m);
}

DensityMatrix make_product(const Vec3& bloch_a, const Vec3& bloch_b) {
  require_finite(bloch_a, "bloch_a");
  require_finite(bloch_b, "bloch_b");
  if (bloch_a.norm() > 1.0 + tol::unit_norm || bloch_b.norm() > 1.0 + tol::unit_norm)
    throw Error(ErrorKind::InvalidArgument, "Bloch vector norm exceeds 1");
  return DensityMatrix::from_matrix(tensor(qubit_density(bloch_a), qubit_density(bloch_b)));
}

}  // namespace qcw
