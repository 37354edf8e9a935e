#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "qcw/operator_core.hpp"

namespace qcw {

// Unit directions z (qubit a) and w (qubit b) entering the local observable
// O4 = z.sigma (x) I + I (x) w.sigma.
class DirectionPair {
 public:
  // Throws InvalidArgument unless both norms are 1 to tol::unit_norm.
  static DirectionPair make(const Vec3& z, const Vec3& w);
  // Uniform on the sphere: normalized standard Gaussian triples.
  static DirectionPair sample(std::mt19937_64& rng);

  const Vec3& z() const noexcept { return z_; }
  const Vec3& w() const noexcept { return w_; }

 private:
  DirectionPair(const Vec3& z, const Vec3& w) : z_(z), w_(w) {}
  Vec3 z_;
  Vec3 w_;
};

// The first `count` direction pairs drawn from a generator seeded with `seed`.
// Randomized witness evaluation and the protocol simulation share this stream.
std::vector<DirectionPair> draw_directions(std::uint64_t seed, int count);

using Expectations = std::array<double, 4>;

// Explicit O1..O4 as 4x4 matrices.
std::array<Mat4, 4> witness_observables(const DirectionPair& d);

// (c1, c2, c3, z.x + w.y), read off the Pauli decomposition.
Expectations observable_expectations(const DensityMatrix& rho, const DirectionPair& d);

// sum_{i<j} |e_i e_j|
double witness_sum(const Expectations& e);

struct Deterministic {};
struct Randomized {
  int n_trials = 5;
  std::uint64_t seed = 0;
};
using WitnessMode = std::variant<Deterministic, Randomized>;

enum class Verdict { ClassicalCertified, Inconclusive, NonclassicalCertified };
enum class ClassicalForm { Chi1, Chi2, Chi3, Chi4, None };

const char* to_string(Verdict v);
const char* to_string(ClassicalForm f);

struct WitnessReport {
  Expectations expectations{};
  double W = 0.0;
  WitnessMode mode = Deterministic{};
  Verdict verdict = Verdict::Inconclusive;
  ClassicalForm matched_form = ClassicalForm::None;
};

// Which chi form fits when W is below threshold: the single expectation with
// the largest magnitude (chi_1 for the maximally mixed state).
ClassicalForm match_form(const Expectations& e);

Verdict decide(double W, double tol, bool bell_diagonal);

bool is_bell_diagonal(const PauliDecomposition& d);

// Throws OutOfClass when the correlation matrix has off-diagonal entries above
// tol::offdiagonal_correlation.
void require_diagonal_class(const PauliDecomposition& d);

// Deterministic mode substitutes e4 = |x| + |y| (its supremum over directions).
// Randomized mode evaluates n_trials seeded direction pairs and keeps the
// trial with the largest W.
WitnessReport witness_value(const DensityMatrix& rho, const WitnessMode& mode = Deterministic{},
                            double tol = tol::witness_zero);

// Witness for one fixed direction pair. The report's mode is Randomized{1, 0};
// callers that drew `d` from a seed overwrite it.
WitnessReport witness_for_directions(const DensityMatrix& rho, const DirectionPair& d,
                                     double tol = tol::witness_zero);

Verdict classify(const DensityMatrix& rho, double tol = tol::witness_zero,
                 const WitnessMode& mode = Deterministic{});

}  // namespace qcw
