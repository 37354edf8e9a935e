#include "qcw/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "qcw/nelder_mead.hpp"

namespace qcw {

namespace {

// Tr_b[(I (x) P) rho]
Mat2 unnormalized_conditional(const Mat4& rho, const Mat2& projector) {
  Mat2 out = Mat2::Zero();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int k = 0; k < 2; ++k)
        for (int m = 0; m < 2; ++m) out(r, c) += projector(k, m) * rho(2 * r + m, 2 * c + k);
  return out;
}

void check_outcome(int outcome) {
  if (outcome != 0 && outcome != 1) throw Error(ErrorKind::InvalidArgument, "outcome index must be 0 or 1");
}

// sum_j Pr(o_j) S(rho_a|j) from the unnormalized conditionals.
double conditional_entropy(const Mat4& rho, const MeasurementBasis& m) {
  double s = 0.0;
  for (int j = 0; j < 2; ++j) {
    const Mat2 cond = unnormalized_conditional(rho, m.projector(j));
    const double p = cond.trace().real();
    if (p <= tol::zero_probability) continue;
    const auto ev = eigenvalues_hermitian(cond);
    const std::array<double, 2> spectrum{ev[0] / p, ev[1] / p};
    s += p * entropy_bits(spectrum);
  }
  return s;
}

}  // namespace

double mutual_information(const DensityMatrix& rho) {
  return von_neumann_entropy(partial_trace(rho, Subsystem::A)) +
         von_neumann_entropy(partial_trace(rho, Subsystem::B)) - von_neumann_entropy(rho);
}

double outcome_probability(const DensityMatrix& rho, const MeasurementBasis& m, int outcome) {
  check_outcome(outcome);
  return unnormalized_conditional(rho.matrix(), m.projector(outcome)).trace().real();
}

Mat2 conditioned_state(const DensityMatrix& rho, const MeasurementBasis& m, int outcome) {
  check_outcome(outcome);
  const Mat2 cond = unnormalized_conditional(rho.matrix(), m.projector(outcome));
  const double p = cond.trace().real();
  if (p <= tol::zero_probability)
    throw Error(ErrorKind::ZeroProbabilityOutcome, "measurement outcome has zero probability");
  return cond / p;
}

MeasuredInformation::MeasuredInformation(const DensityMatrix& rho)
    : rho_(rho.matrix()), s_a_(von_neumann_entropy(partial_trace(rho, Subsystem::A))) {}

double MeasuredInformation::operator()(const MeasurementBasis& m) const {
  return s_a_ - conditional_entropy(rho_, m);
}

double measured_mutual_information(const DensityMatrix& rho, const MeasurementBasis& m) {
  return MeasuredInformation(rho)(m);
}

ClassicalCorrelation classical_correlation(const DensityMatrix& rho, const OptimizerSettings& settings) {
  if (settings.grid_theta < 2 || settings.grid_phi < 1 || settings.starts < 1)
    throw Error(ErrorKind::InvalidArgument, "optimizer grid must have >= 2 theta and >= 1 phi samples");
  const MeasuredInformation J(rho);
  const double dtheta = std::numbers::pi / (settings.grid_theta - 1);
  const double dphi = 2.0 * std::numbers::pi / settings.grid_phi;

  struct Sample {
    double value;
    MeasurementBasis basis;
  };
  std::vector<Sample> grid;
  grid.reserve(static_cast<std::size_t>(settings.grid_theta) * settings.grid_phi);
  for (int i = 0; i < settings.grid_theta; ++i)
    for (int k = 0; k < settings.grid_phi; ++k) {
      const MeasurementBasis b{i * dtheta, k * dphi};
      grid.push_back({J(b), b});
    }
  ClassicalCorrelation out;
  out.evaluations = static_cast<int>(grid.size());

  const auto n_starts = std::min<std::size_t>(settings.starts, grid.size());
  std::partial_sort(grid.begin(), grid.begin() + n_starts, grid.end(),
                    [](const Sample& a, const Sample& b) { return a.value > b.value; });
  out.J_star = grid[0].value;
  out.basis = grid[0].basis;

  SimplexSettings simplex;
  simplex.max_evaluations = settings.max_evaluations;
  const std::array<double, 2> step{0.5 * dtheta, 0.5 * dphi};
  for (std::size_t s = 0; s < n_starts; ++s) {
    auto objective = [&](const std::array<double, 2>& p) { return -J(MeasurementBasis{p[0], p[1]}); };
    const auto res = nelder_mead<2>(objective, {grid[s].basis.theta, grid[s].basis.phi}, step, simplex);
    out.evaluations += res.evaluations;
    if (!res.converged)
      throw Error(ErrorKind::OptimizerFailure, "measurement-basis refinement did not converge within budget");
    if (-res.value > out.J_star) {
      out.J_star = -res.value;
      out.basis = MeasurementBasis{res.x[0], res.x[1]};
    }
  }
  out.basis = out.basis.canonical();
  return out;
}

DiscordReport discord(const DensityMatrix& rho, const OptimizerSettings& settings) {
  DiscordReport r;
  r.I = mutual_information(rho);
  const ClassicalCorrelation cc = classical_correlation(rho, settings);
  r.J_star = cc.J_star;
  r.optimal_basis = cc.basis;
  r.optimizer_evals = cc.evaluations;
  r.D = r.I - r.J_star;
  if (r.D < 0.0 && r.D >= -1e-8) r.D = 0.0;
  return r;
}

}  // namespace qcw
