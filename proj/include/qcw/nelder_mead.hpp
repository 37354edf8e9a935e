#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

namespace qcw {

template <std::size_t N>
struct SimplexResult {
  std::array<double, N> x{};
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

struct SimplexSettings {
  int max_evaluations = 4000;
  double value_tolerance = 1e-14;  // spread of vertex values
  double step_tolerance = 1e-9;    // max vertex distance from the best vertex
};

// Nelder-Mead minimization with the standard coefficients
// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
template <std::size_t N, typename F>
SimplexResult<N> nelder_mead(F&& f, const std::array<double, N>& start, const std::array<double, N>& step,
                             const SimplexSettings& settings = {}) {
  using Point = std::array<double, N>;
  std::array<Point, N + 1> pts;
  std::array<double, N + 1> vals;
  int evals = 0;
  auto eval = [&](const Point& p) {
    ++evals;
    return f(p);
  };

  pts[0] = start;
  for (std::size_t i = 0; i < N; ++i) {
    pts[i + 1] = start;
    pts[i + 1][i] += step[i];
  }
  for (std::size_t i = 0; i <= N; ++i) vals[i] = eval(pts[i]);

  std::array<std::size_t, N + 1> order;
  auto sort_vertices = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    std::array<Point, N + 1> p2;
    std::array<double, N + 1> v2;
    for (std::size_t i = 0; i <= N; ++i) {
      p2[i] = pts[order[i]];
      v2[i] = vals[order[i]];
    }
    pts = p2;
    vals = v2;
  };
  auto combine = [](const Point& a, const Point& b, double t) {
    // a + t (b - a)
    Point r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + t * (b[i] - a[i]);
    return r;
  };

  SimplexResult<N> result;
  while (true) {
    sort_vertices();
    double spread = vals[N] - vals[0];
    double size = 0.0;
    for (std::size_t k = 1; k <= N; ++k)
      for (std::size_t i = 0; i < N; ++i) size = std::max(size, std::abs(pts[k][i] - pts[0][i]));
    if (spread <= settings.value_tolerance && size <= settings.step_tolerance) {
      result.converged = true;
      break;
    }
    if (evals >= settings.max_evaluations) break;

    Point centroid{};
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t i = 0; i < N; ++i) centroid[i] += pts[k][i] / static_cast<double>(N);

    const Point reflected = combine(centroid, pts[N], -1.0);
    const double fr = eval(reflected);
    if (fr < vals[0]) {
      const Point expanded = combine(centroid, pts[N], -2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        pts[N] = expanded;
        vals[N] = fe;
      } else {
        pts[N] = reflected;
        vals[N] = fr;
      }
      continue;
    }
    if (fr < vals[N - 1]) {
      pts[N] = reflected;
      vals[N] = fr;
      continue;
    }
    const bool outside = fr < vals[N];
    const Point contracted = outside ? combine(centroid, reflected, 0.5) : combine(centroid, pts[N], 0.5);
    const double fc = eval(contracted);
    if (fc < (outside ? fr : vals[N])) {
      pts[N] = contracted;
      vals[N] = fc;
      continue;
    }
    for (std::size_t k = 1; k <= N; ++k) {
      pts[k] = combine(pts[0], pts[k], 0.5);
      vals[k] = eval(pts[k]);
    }
  }
  result.x = pts[0];
  result.value = vals[0];
  result.evaluations = evals;
  return result;
}

}  // namespace qcw
