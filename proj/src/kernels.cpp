#include "qcw/kernels.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>

#include "qcw/entanglement.hpp"
#include "qcw/state_factory.hpp"
#include "qcw/witness.hpp"

namespace qcw {

MeasurementBasis AngleGrid::at(int i, int k) const {
  return {i * std::numbers::pi / (n_theta - 1), k * 2.0 * std::numbers::pi / n_phi};
}

namespace {

void check_grid(const AngleGrid& grid) {
  if (grid.n_theta < 2 || grid.n_phi < 1) throw Error(ErrorKind::InvalidArgument, "angle grid too small");
}

// Collects the first exception thrown inside a parallel loop.
class ErrorSlot {
 public:
  template <typename F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

SweepRow werner_row(double alpha, bool with_discord) {
  const DensityMatrix rho = make_werner(alpha);
  const EntanglementReport ent = entanglement_report(rho);
  SweepRow row;
  row.alpha = alpha;
  row.W = witness_value(rho).W;
  row.discord = with_discord ? discord(rho).D : std::numeric_limits<double>::quiet_NaN();
  row.mutual_info = mutual_information(rho);
  row.negativity = ent.negativity;
  row.chsh_max = ent.chsh_max;
  return row;
}

}  // namespace

std::vector<double> measured_information_grid(const DensityMatrix& rho, const AngleGrid& grid) {
  check_grid(grid);
  const MeasuredInformation J(rho);
  std::vector<double> out(grid.size());
  const int n = static_cast<int>(grid.size());
#pragma omp parallel for schedule(static)
  for (int idx = 0; idx < n; ++idx) out[idx] = J(grid.at(idx / grid.n_phi, idx % grid.n_phi));
  return out;
}

std::vector<double> measured_information_grid_serial(const DensityMatrix& rho, const AngleGrid& grid) {
  check_grid(grid);
  const MeasuredInformation J(rho);
  std::vector<double> out;
  out.reserve(grid.size());
  for (int i = 0; i < grid.n_theta; ++i)
    for (int k = 0; k < grid.n_phi; ++k) out.push_back(J(grid.at(i, k)));
  return out;
}

GridMaximum grid_maximum(const std::vector<double>& values, const AngleGrid& grid) {
  if (values.size() != grid.size() || values.empty())
    throw Error(ErrorKind::InvalidArgument, "grid values do not match grid shape");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[best]) best = i;
  const int n_phi = grid.n_phi;
  return {values[best], grid.at(static_cast<int>(best) / n_phi, static_cast<int>(best) % n_phi)};
}

std::vector<DiscordReport> discord_batch(std::span<const DensityMatrix> states, const OptimizerSettings& settings) {
  std::vector<DiscordReport> out(states.size());
  ErrorSlot errors;
  const int n = static_cast<int>(states.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) errors.run([&] { out[i] = discord(states[i], settings); });
  errors.rethrow();
  return out;
}

std::vector<DiscordReport> discord_batch_serial(std::span<const DensityMatrix> states,
                                                const OptimizerSettings& settings) {
  std::vector<DiscordReport> out;
  out.reserve(states.size());
  for (const auto& rho : states) out.push_back(discord(rho, settings));
  return out;
}

std::vector<SweepRow> werner_sweep(std::span<const double> alphas, bool with_discord) {
  std::vector<SweepRow> out(alphas.size());
  ErrorSlot errors;
  const int n = static_cast<int>(alphas.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) errors.run([&] { out[i] = werner_row(alphas[i], with_discord); });
  errors.rethrow();
  return out;
}

std::vector<SweepRow> werner_sweep_serial(std::span<const double> alphas, bool with_discord) {
  std::vector<SweepRow> out;
  out.reserve(alphas.size());
  for (double a : alphas) out.push_back(werner_row(a, with_discord));
  return out;
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "linspace needs at least 2 points");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = a + (b - a) * static_cast<double>(i) / (n - 1);
  out.back() = b;
  return out;
}

}  // namespace qcw
