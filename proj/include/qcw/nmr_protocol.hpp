#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>

#include "qcw/operator_core.hpp"
#include "qcw/witness.hpp"

namespace qcw {

// |0><0| (x) I + |1><1| (x) sigma_x
Mat4 cnot_ab();

// R_k = R_k(pi/2) (x) R_k(pi/2), R_k(pi/2) = cos(pi/4) I - i sin(pi/4) sigma_k, k in {2, 3}.
Mat4 rotation_pair(int axis);

// U rho U^dagger
DensityMatrix conjugate(const DensityMatrix& rho, const Mat4& unitary);

// Exact x-magnetization of qubit a: <sigma_x (x) I>.
double x_magnetization(const DensityMatrix& rho);

struct MagnetizationEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
};

// Draws `shots` +/-1 outcomes with Pr(+1) = (1 + m)/2 for the exact
// expectation m. Returns the sample mean and sqrt((1 - mean^2)/shots).
MagnetizationEstimate sample_expectation(double exact, std::int64_t shots, std::mt19937_64& rng);

// x-magnetization of qubit a, sampled.
MagnetizationEstimate sample_magnetization(const DensityMatrix& transformed, std::int64_t shots,
                                           std::uint64_t seed);

struct ProtocolRun {
  DensityMatrix eta;   // CNOT rho CNOT
  DensityMatrix zeta;  // CNOT (R3 rho R3^dagger) CNOT
  DensityMatrix xi;    // CNOT (R2 rho R2^dagger) CNOT
  std::array<double, 3> magnetizations{};  // m_eta, m_zeta, m_xi (exact or sampled)
  std::array<double, 3> stderrs{};         // zero in exact mode
  std::array<double, 3> residuals{};       // |m_i - <sigma_i (x) sigma_i>_rho|
  std::optional<std::int64_t> shots;       // empty = exact
  std::optional<std::uint64_t> seed;
};

// Exact mode: magnetizations are the exact expectation values.
ProtocolRun transform_states(const DensityMatrix& rho);

// Sampled mode: each of the three readouts draws `shots` outcomes from an
// independent stream derived from `seed`.
ProtocolRun run_protocol(const DensityMatrix& rho, std::optional<std::int64_t> shots, std::uint64_t seed = 0);

struct ProtocolWitness {
  WitnessReport report;
  std::array<double, 4> stderrs{};  // per expectation; zero in exact mode
  double W_stderr = 0.0;            // first-order propagated
};

// e1..e3 from the three protocol readouts, e4 from separate local readouts
// <z.sigma (x) I> and <I (x) w.sigma>. With shots, W ~ 0 is declared when
// W <= sigma_threshold * W_stderr; in exact mode tol::witness_zero applies.
ProtocolWitness witness_via_protocol(const DensityMatrix& rho, std::optional<std::int64_t> shots,
                                     const DirectionPair& d, std::uint64_t seed = 0,
                                     double sigma_threshold = 3.0);

// Directions drawn exactly as witness_value(rho, Randomized{1, seed}) draws them.
ProtocolWitness witness_via_protocol(const DensityMatrix& rho, std::optional<std::int64_t> shots,
                                     std::uint64_t seed, double sigma_threshold = 3.0);

}  // namespace qcw
