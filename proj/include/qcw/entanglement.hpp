#pragma once

#include "qcw/operator_core.hpp"

namespace qcw {

struct EntanglementReport {
  double min_pt_eigenvalue = 0.0;
  double negativity = 0.0;  // sum of |negative eigenvalues| of the partial transpose
  bool ppt = true;
  double chsh_max = 0.0;    // 2 sqrt(u1 + u2), u1 >= u2 the largest eigenvalues of T^T T
  bool chsh_violated = false;
};

// Transpose on the indices of qubit b.
Mat4 partial_transpose(const DensityMatrix& rho, Subsystem side = Subsystem::B);

// Maximum CHSH value over all local spin measurements, from the correlation matrix.
double chsh_max(const Mat3& T);

EntanglementReport entanglement_report(const DensityMatrix& rho);

}  // namespace qcw
