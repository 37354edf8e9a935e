#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include <omp.h>

#include "qcw/kernels.hpp"
#include "qcw/state_factory.hpp"
#include "support/oracles.hpp"

using namespace qcw;

TEST_CASE("parallel and serial grids agree bit for bit") {
  omp_set_num_threads(4);
  std::mt19937_64 rng(1);
  const AngleGrid grid{37, 72};
  for (int n = 0; n < 5; ++n) {
    const DensityMatrix rho = testing::random_density(rng);
    const auto par = measured_information_grid(rho, grid);
    const auto ser = measured_information_grid_serial(rho, grid);
    REQUIRE(par.size() == grid.size());
    CHECK(par == ser);
    const auto best = grid_maximum(par, grid);
    const auto oracle = testing::oracle_grid_max(rho.matrix(), 37, 72);
    CHECK(std::abs(best.value - oracle.value) < 1e-10);
  }
  CHECK_THROWS_AS(measured_information_grid(make_werner(0.1), AngleGrid{1, 4}), Error);
}

TEST_CASE("grid points follow the documented layout") {
  const AngleGrid grid{181, 360};
  CHECK(grid.at(0, 0).theta == 0.0);
  CHECK(grid.at(180, 0).theta == doctest::Approx(M_PI));
  CHECK(grid.at(90, 90).phi == doctest::Approx(M_PI / 2));
  CHECK(grid.size() == 181u * 360u);
}

TEST_CASE("discord batch matches the serial reference") {
  omp_set_num_threads(4);
  std::mt19937_64 rng(2);
  std::vector<DensityMatrix> states;
  for (int n = 0; n < 12; ++n) states.push_back(testing::random_density(rng));
  const auto par = discord_batch(states);
  const auto ser = discord_batch_serial(states);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].D == ser[i].D);
    CHECK(par[i].J_star == ser[i].J_star);
    CHECK(par[i].optimizer_evals == ser[i].optimizer_evals);
  }
}

TEST_CASE("parallel batch rethrows failures") {
  omp_set_num_threads(4);
  std::mt19937_64 rng(3);
  std::vector<DensityMatrix> states;
  for (int n = 0; n < 6; ++n) states.push_back(testing::random_density(rng));
  OptimizerSettings starved;
  starved.max_evaluations = 3;
  CHECK_THROWS_AS(discord_batch(states, starved), Error);
}

TEST_CASE("Werner sweep") {
  omp_set_num_threads(4);
  const auto alphas = linspace(0.0, 1.0, 11);
  const auto rows = werner_sweep(alphas, true);
  const auto ref = werner_sweep_serial(alphas, true);
  REQUIRE(rows.size() == 11);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].alpha == alphas[i]);
    CHECK(std::abs(rows[i].W - 3 * alphas[i] * alphas[i]) <= 1e-9);
    CHECK(rows[i].W == ref[i].W);
    CHECK(rows[i].discord == ref[i].discord);
    CHECK(rows[i].negativity == ref[i].negativity);
  }
  CHECK(rows.back().W == doctest::Approx(3.0));
  CHECK(rows.front().discord == 0.0);

  const auto fast = werner_sweep(alphas, false);
  CHECK(std::isnan(fast[3].discord));
  CHECK_THROWS_AS(werner_sweep(std::vector<double>{0.5, 1.5}, false), Error);
}

TEST_CASE("linspace") {
  const auto v = linspace(0.0, 1.0, 101);
  CHECK(v.front() == 0.0);
  CHECK(v.back() == 1.0);
  CHECK(v[33] == doctest::Approx(0.33));
  CHECK_THROWS_AS(linspace(0.0, 1.0, 1), Error);
}
