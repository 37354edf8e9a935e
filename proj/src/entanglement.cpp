#include "qcw/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace qcw {

Mat4 partial_transpose(const DensityMatrix& rho, Subsystem side) {
  const Mat4& m = rho.matrix();
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          if (side == Subsystem::B)
            out(2 * i + k, 2 * j + l) = m(2 * i + l, 2 * j + k);
          else
            out(2 * i + k, 2 * j + l) = m(2 * j + k, 2 * i + l);
        }
  return out;
}

double chsh_max(const Mat3& T) {
  Eigen::SelfAdjointEigenSolver<Mat3> solver(T.transpose() * T, Eigen::EigenvaluesOnly);
  // ascending order
  const auto& u = solver.eigenvalues();
  return 2.0 * std::sqrt(std::max(0.0, u(2) + u(1)));
}

EntanglementReport entanglement_report(const DensityMatrix& rho) {
  EntanglementReport r;
  const auto spectrum = eigenvalues_hermitian(partial_transpose(rho));
  r.min_pt_eigenvalue = spectrum[3];
  for (double v : spectrum)
    if (v < 0.0) r.negativity -= v;
  r.ppt = r.min_pt_eigenvalue >= -tol::psd;
  r.chsh_max = chsh_max(decompose(rho).T);
  r.chsh_violated = r.chsh_max > 2.0 + 1e-10;
  return r;
}

}  // namespace qcw
