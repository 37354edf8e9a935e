#include "qcw/nmr_protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qcw {

Mat4 cnot_ab() {
  Mat2 p0 = Mat2::Zero();
  Mat2 p1 = Mat2::Zero();
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  return tensor(p0, pauli(0)) + tensor(p1, pauli(1));
}

Mat4 rotation_pair(int axis) {
  if (axis != 2 && axis != 3) throw Error(ErrorKind::InvalidArgument, "rotation axis must be 2 or 3");
  const double angle = std::numbers::pi / 4.0;
  const Mat2 local = std::cos(angle) * pauli(0) - Complex{0.0, std::sin(angle)} * pauli(axis);
  return tensor(local, local);
}

DensityMatrix conjugate(const DensityMatrix& rho, const Mat4& unitary) {
  return DensityMatrix::from_matrix(unitary * rho.matrix() * unitary.adjoint());
}

double x_magnetization(const DensityMatrix& rho) { return expectation(rho, pauli_product(1, 0)); }

MagnetizationEstimate sample_expectation(double exact, std::int64_t shots, std::mt19937_64& rng) {
  if (shots < 1) throw Error(ErrorKind::InvalidArgument, "shots must be >= 1");
  const double p_up = std::clamp(0.5 * (1.0 + exact), 0.0, 1.0);
  std::binomial_distribution<std::int64_t> draw(shots, p_up);
  const std::int64_t ups = draw(rng);
  const double n = static_cast<double>(shots);
  const double mean = (2.0 * static_cast<double>(ups) - n) / n;
  return {mean, std::sqrt(std::max(0.0, 1.0 - mean * mean) / n)};
}

MagnetizationEstimate sample_magnetization(const DensityMatrix& transformed, std::int64_t shots,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_expectation(x_magnetization(transformed), shots, rng);
}

namespace {

// Independent generator per readout channel.
std::mt19937_64 channel_rng(std::uint64_t seed, std::uint32_t channel) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), channel};
  return std::mt19937_64(seq);
}

}  // namespace

ProtocolRun run_protocol(const DensityMatrix& rho, std::optional<std::int64_t> shots, std::uint64_t seed) {
  const Mat4 cnot = cnot_ab();
  const Mat4 r3 = rotation_pair(3);
  const Mat4 r2 = rotation_pair(2);
  ProtocolRun run{
      conjugate(rho, cnot),
      conjugate(rho, cnot * r3),
      conjugate(rho, cnot * r2),
      {},
      {},
      {},
      shots,
      shots ? std::optional<std::uint64_t>(seed) : std::nullopt,
  };

  const std::array<const DensityMatrix*, 3> states{&run.eta, &run.zeta, &run.xi};
  for (int i = 0; i < 3; ++i) {
    const double exact = x_magnetization(*states[i]);
    const double target = expectation(rho, pauli_product(i + 1, i + 1));
    if (shots) {
      auto rng = channel_rng(seed, static_cast<std::uint32_t>(i));
      const auto est = sample_expectation(exact, *shots, rng);
      run.magnetizations[i] = est.estimate;
      run.stderrs[i] = est.standard_error;
    } else {
      run.magnetizations[i] = exact;
    }
    run.residuals[i] = std::abs(run.magnetizations[i] - target);
  }
  return run;
}

ProtocolRun transform_states(const DensityMatrix& rho) { return run_protocol(rho, std::nullopt); }

ProtocolWitness witness_via_protocol(const DensityMatrix& rho, std::optional<std::int64_t> shots,
                                     const DirectionPair& d, std::uint64_t seed, double sigma_threshold) {
  const PauliDecomposition p = decompose(rho);
  require_diagonal_class(p);

  const ProtocolRun run = run_protocol(rho, shots, seed);
  ProtocolWitness out;
  Expectations e{run.magnetizations[0], run.magnetizations[1], run.magnetizations[2], 0.0};
  for (int i = 0; i < 3; ++i) out.stderrs[i] = run.stderrs[i];

  const Mat2 id = pauli(0);
  const double exact_z = expectation(rho, tensor(pauli_dot(d.z()), id));
  const double exact_w = expectation(rho, tensor(id, pauli_dot(d.w())));
  if (shots) {
    auto rng_z = channel_rng(seed, 3);
    auto rng_w = channel_rng(seed, 4);
    const auto mz = sample_expectation(exact_z, *shots, rng_z);
    const auto mw = sample_expectation(exact_w, *shots, rng_w);
    e[3] = mz.estimate + mw.estimate;
    out.stderrs[3] = std::hypot(mz.standard_error, mw.standard_error);
  } else {
    e[3] = exact_z + exact_w;
  }

  WitnessReport& r = out.report;
  r.expectations = e;
  r.W = witness_sum(e);
  r.mode = Randomized{1, seed};

  double var = 0.0;
  for (int k = 0; k < 4; ++k) {
    double grad = 0.0;
    for (int j = 0; j < 4; ++j)
      if (j != k) grad += std::abs(e[j]);
    var += grad * grad * out.stderrs[k] * out.stderrs[k];
  }
  out.W_stderr = std::sqrt(var);

  const double threshold = shots ? sigma_threshold * out.W_stderr : tol::witness_zero;
  r.verdict = decide(r.W, threshold, is_bell_diagonal(p));
  r.matched_form = r.verdict == Verdict::ClassicalCertified ? match_form(e) : ClassicalForm::None;
  return out;
}

ProtocolWitness witness_via_protocol(const DensityMatrix& rho, std::optional<std::int64_t> shots,
                                     std::uint64_t seed, double sigma_threshold) {
  return witness_via_protocol(rho, shots, draw_directions(seed, 1).front(), seed, sigma_threshold);
}

}  // namespace qcw
