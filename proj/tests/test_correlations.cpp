#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qcw/correlations.hpp"
#include "qcw/state_factory.hpp"
#include "qcw/witness.hpp"
#include "support/oracles.hpp"

using namespace qcw;
using qcw::testing::max_abs_diff;

namespace {

const BlochAngles kZ{0.0, 0.0};
const BlochAngles kX{std::numbers::pi / 2, 0.0};

DensityMatrix correlated_zz() {
  ProbabilityTable p{{{0.5, 0.0}, {0.0, 0.5}}};
  return make_classical(p, kZ, kZ);
}

DensityMatrix random_classical(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ProbabilityTable p{{{u(rng), u(rng)}, {u(rng), u(rng)}}};
  const double s = p[0][0] + p[0][1] + p[1][0] + p[1][1];
  for (auto& row : p)
    for (auto& v : row) v /= s;
  const BlochAngles ba{std::acos(2 * u(rng) - 1), 2 * std::numbers::pi * u(rng)};
  const BlochAngles bb{std::acos(2 * u(rng) - 1), 2 * std::numbers::pi * u(rng)};
  return make_classical(p, ba, bb);
}

}  // namespace

TEST_CASE("mutual information") {
  CHECK(std::abs(mutual_information(make_werner(0.0))) < 1e-12);
  CHECK(mutual_information(make_werner(1.0)) == doctest::Approx(2.0).epsilon(1e-12));
  const double s = testing::shannon_bits({0.625, 0.125, 0.125, 0.125});
  CHECK(std::abs(mutual_information(make_werner(0.5)) - (2.0 - s)) < 1e-12);
}

TEST_CASE("outcome probabilities") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
  for (int n = 0; n < 20; ++n) {
    const BlochAngles b{u(rng) / 2, u(rng)};
    CHECK(outcome_probability(make_werner(0.0), b, 0) == doctest::Approx(0.5));
    CHECK(outcome_probability(make_werner(0.8), b, 1) == doctest::Approx(0.5));
  }
  Mat4 ket00 = Mat4::Zero();
  ket00(0, 0) = 1;
  CHECK(outcome_probability(DensityMatrix::from_matrix(ket00), kZ, 0) == doctest::Approx(1.0));

  for (int n = 0; n < 100; ++n) {
    const DensityMatrix rho = testing::random_density(rng);
    const BlochAngles b{u(rng) / 2, u(rng)};
    const double p0 = outcome_probability(rho, b, 0);
    const double p1 = outcome_probability(rho, b, 1);
    CHECK(p0 >= 0.0);
    CHECK(p1 >= 0.0);
    CHECK(std::abs(p0 + p1 - 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(outcome_probability(make_werner(0.5), kZ, 2), Error);
}

TEST_CASE("conditioned states") {
  std::mt19937_64 rng(2);
  const Vec3 ra = testing::random_ball(rng);
  const DensityMatrix prod = make_product(ra, testing::random_ball(rng));
  for (int j = 0; j < 2; ++j) CHECK(max_abs_diff(conditioned_state(prod, BlochAngles{1.1, 2.3}, j), qubit_density(ra)) < 1e-12);

  Mat2 one = Mat2::Zero();
  one(1, 1) = 1.0;
  CHECK(max_abs_diff(conditioned_state(make_werner(1.0), kZ, 0), one) < 1e-12);

  // singlet: b found along +x leaves a along -x
  const Mat2 cond = conditioned_state(make_werner(1.0), kX, 0);
  CHECK((bloch_vector(cond) - Vec3(-1, 0, 0)).norm() < 1e-12);

  Mat4 ket00 = Mat4::Zero();
  ket00(0, 0) = 1;
  try {
    conditioned_state(DensityMatrix::from_matrix(ket00), kZ, 1);
    FAIL("expected ZeroProbabilityOutcome");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroProbabilityOutcome);
  }
}

TEST_CASE("measured mutual information") {
  std::mt19937_64 rng(3);
  const DensityMatrix prod = make_product(testing::random_ball(rng), testing::random_ball(rng));
  CHECK(std::abs(measured_mutual_information(prod, BlochAngles{0.4, 1.0})) < 1e-12);

  CHECK(measured_mutual_information(correlated_zz(), kZ) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(measured_mutual_information(correlated_zz(), kX)) < 1e-12);

  // zero-probability outcome contributes nothing instead of failing
  Mat4 ket00 = Mat4::Zero();
  ket00(0, 0) = 1;
  CHECK(std::abs(measured_mutual_information(DensityMatrix::from_matrix(ket00), kZ)) < 1e-12);
}

TEST_CASE("measured information matches the direct projection oracle") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n < 200; ++n) {
    const DensityMatrix rho = testing::random_density(rng);
    const BlochAngles b{std::numbers::pi * u(rng), 2 * std::numbers::pi * u(rng)};
    const double J = measured_mutual_information(rho, b);
    CHECK(std::abs(J - testing::oracle_measured_information(rho.matrix(), b.theta, b.phi)) < 1e-10);
    const double sa = von_neumann_entropy(partial_trace(rho, Subsystem::A));
    CHECK(J >= -1e-8);
    CHECK(J <= std::min(sa, 1.0) + 1e-8);
  }
}

TEST_CASE("classical correlation") {
  std::mt19937_64 rng(5);
  const auto prod = classical_correlation(make_product(testing::random_ball(rng), testing::random_ball(rng)));
  CHECK(std::abs(prod.J_star) < 1e-10);

  const auto singlet = classical_correlation(make_werner(1.0));
  CHECK(singlet.J_star == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(testing::oracle_grid_max(make_werner(1.0).matrix(), 19, 36).value - 1.0) < 1e-9);

  const auto zz = classical_correlation(correlated_zz());
  CHECK(zz.J_star == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(zz.basis.theta) < 1e-4);
  CHECK(zz.evaluations > 13 * 25);

  OptimizerSettings starved;
  starved.max_evaluations = 5;
  try {
    classical_correlation(testing::random_density(rng), starved);
    FAIL("expected OptimizerFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OptimizerFailure);
  }
}

TEST_CASE("optimizer is at least as good as a dense grid") {
  std::mt19937_64 rng(6);
  for (int n = 0; n < 8; ++n) {
    const DensityMatrix rho = testing::random_density(rng);
    const double opt = classical_correlation(rho).J_star;
    const double grid = testing::oracle_grid_max(rho.matrix(), 91, 180).value;
    CHECK(opt >= grid - 1e-12);
    CHECK(opt - grid <= 1e-3);
  }
}

TEST_CASE("discord") {
  const auto w1 = discord(make_werner(1.0));
  CHECK(w1.I == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(w1.J_star == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(w1.D == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(discord(make_werner(0.0)).D == 0.0);

  std::mt19937_64 rng(7);
  for (int n = 0; n < 40; ++n) CHECK(discord(random_classical(rng)).D <= 1e-6);
}

TEST_CASE("discord bounds and local-unitary invariance") {
  std::mt19937_64 rng(8);
  for (int n = 0; n < 30; ++n) {
    const DensityMatrix rho = testing::random_density(rng);
    const auto r = discord(rho);
    CHECK(r.D >= 0.0);
    CHECK(r.D <= r.I + 1e-12);
    CHECK(r.I >= r.J_star - 1e-8);
    CHECK(std::abs(r.D - (r.I - r.J_star)) < 1e-8);

    const Mat4 U = tensor(testing::random_unitary2(rng), testing::random_unitary2(rng));
    const DensityMatrix moved = DensityMatrix::from_matrix(U * rho.matrix() * U.adjoint());
    CHECK(std::abs(discord(moved).D - r.D) <= 1e-5);
  }
}

TEST_CASE("Werner discord is nondecreasing in alpha") {
  double previous = -1.0;
  for (int k = 0; k <= 20; ++k) {
    const double d = discord(make_werner(k / 20.0)).D;
    CHECK(d >= previous - 1e-6);
    previous = d;
  }
}

TEST_CASE("Bell-diagonal discord matches the closed form") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 100; ++n) {
    const Vec3 c = testing::random_valid_bell_c(rng);
    CHECK(std::abs(discord(make_bell_diagonal(c)).D - testing::bell_diagonal_discord(c)) <= 1e-8);
  }
  // small second correlation: W is already far above 1e-9 while D is below 1e-6
  const Vec3 edge(0.0, -0.116941, 0.000702104);
  const double d = discord(make_bell_diagonal(edge)).D;
  CHECK(d == doctest::Approx(testing::bell_diagonal_discord(edge)).epsilon(1e-3));
  CHECK(d < 1e-6);
  CHECK(witness_value(make_bell_diagonal(edge)).W > 1e-5);
}
