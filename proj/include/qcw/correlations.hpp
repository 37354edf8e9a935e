#pragma once

#include "qcw/operator_core.hpp"
#include "qcw/state_factory.hpp"

namespace qcw {

// Rank-1 projective measurement on qubit b.
using MeasurementBasis = BlochAngles;

// I(rho) = S(rho_a) + S(rho_b) - S(rho), in bits.
double mutual_information(const DensityMatrix& rho);

// Pr(o_j) = Tr((I (x) |o_j><o_j|) rho)
double outcome_probability(const DensityMatrix& rho, const MeasurementBasis& m, int outcome);

// State of qubit a after outcome j on qubit b. Throws ZeroProbabilityOutcome
// when Pr(o_j) <= tol::zero_probability.
Mat2 conditioned_state(const DensityMatrix& rho, const MeasurementBasis& m, int outcome);

// J(rho) = S(rho_a) - sum_j Pr(o_j) S(rho_a|j). Outcomes with probability
// below tol::zero_probability contribute nothing.
double measured_mutual_information(const DensityMatrix& rho, const MeasurementBasis& m);

// Repeated evaluation of J for one state; caches S(rho_a).
class MeasuredInformation {
 public:
  explicit MeasuredInformation(const DensityMatrix& rho);
  double operator()(const MeasurementBasis& m) const;
  double marginal_entropy() const noexcept { return s_a_; }

 private:
  Mat4 rho_;
  double s_a_;
};

struct OptimizerSettings {
  int grid_theta = 13;   // theta samples on [0, pi]
  int grid_phi = 25;     // phi samples on [0, 2 pi)
  int starts = 3;        // local refinements launched from the best grid points
  int max_evaluations = 4000;  // per refinement
};

struct ClassicalCorrelation {
  double J_star = 0.0;
  MeasurementBasis basis;
  int evaluations = 0;
};

// Coarse grid followed by Nelder-Mead refinement from the best grid points.
// Throws OptimizerFailure if a refinement exhausts its evaluation budget.
ClassicalCorrelation classical_correlation(const DensityMatrix& rho, const OptimizerSettings& settings = {});

struct DiscordReport {
  double I = 0.0;
  double J_star = 0.0;
  double D = 0.0;
  MeasurementBasis optimal_basis;
  int optimizer_evals = 0;
};

// D = I - J_star; values in [-1e-8, 0) are reported as 0.
DiscordReport discord(const DensityMatrix& rho, const OptimizerSettings& settings = {});

}  // namespace qcw
