#pragma once

#include <span>
#include <vector>

#include "qcw/correlations.hpp"
#include "qcw/operator_core.hpp"

// Batch kernels. Each has an OpenMP version and a serial reference with the
// same per-element arithmetic, so results agree bit for bit.
namespace qcw {

struct AngleGrid {
  int n_theta = 181;  // theta_i = i pi / (n_theta - 1)
  int n_phi = 360;    // phi_k = 2 pi k / n_phi

  MeasurementBasis at(int i, int k) const;
  std::size_t size() const { return static_cast<std::size_t>(n_theta) * n_phi; }
};

// J(rho, basis) over the grid, row-major in (theta, phi).
std::vector<double> measured_information_grid(const DensityMatrix& rho, const AngleGrid& grid);
std::vector<double> measured_information_grid_serial(const DensityMatrix& rho, const AngleGrid& grid);

struct GridMaximum {
  double value = 0.0;
  MeasurementBasis basis;
};
GridMaximum grid_maximum(const std::vector<double>& values, const AngleGrid& grid);

std::vector<DiscordReport> discord_batch(std::span<const DensityMatrix> states,
                                         const OptimizerSettings& settings = {});
std::vector<DiscordReport> discord_batch_serial(std::span<const DensityMatrix> states,
                                                const OptimizerSettings& settings = {});

struct SweepRow {
  double alpha = 0.0;
  double W = 0.0;
  double discord = 0.0;  // NaN unless requested
  double mutual_info = 0.0;
  double negativity = 0.0;
  double chsh_max = 0.0;
};

// Werner family rows in input order.
std::vector<SweepRow> werner_sweep(std::span<const double> alphas, bool with_discord);
std::vector<SweepRow> werner_sweep_serial(std::span<const double> alphas, bool with_discord);

// n evenly spaced points from a to b inclusive.
std::vector<double> linspace(double a, double b, int n);

}  // namespace qcw
