#include "bqc/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bqc {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

struct Vertex {
  std::vector<double> x;
  double f;
};

}  // namespace

NelderMeadResult nelder_mead_minimize(const Objective &f, std::vector<double> x0, const NelderMeadOptions &opt) {
  const std::size_t n = x0.size();
  if (n == 0) throw std::invalid_argument("nelder_mead_minimize: empty start point");
  if (opt.step.size() != n) throw std::invalid_argument("nelder_mead_minimize: step size mismatch");
  const bool bounded = !opt.lower.empty();
  if (bounded && (opt.lower.size() != n || opt.upper.size() != n))
    throw std::invalid_argument("nelder_mead_minimize: bounds size mismatch");

  auto project = [&](std::vector<double> &x) {
    if (!bounded) return;
    for (std::size_t i = 0; i < n; ++i) x[i] = std::clamp(x[i], opt.lower[i], opt.upper[i]);
  };

  std::size_t evals = 0;
  auto eval = [&](const std::vector<double> &x) {
    ++evals;
    return f(std::span<const double>(x));
  };

  project(x0);
  std::vector<Vertex> simplex;
  simplex.reserve(n + 1);
  simplex.push_back({x0, eval(x0)});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x = x0;
    double h = opt.step[i];
    if (bounded && x[i] + h > opt.upper[i]) h = -h;
    x[i] += h;
    project(x);
    simplex.push_back({x, eval(x)});
  }

  auto affine = [&](const std::vector<double> &a, const std::vector<double> &b, double t) {
    // a + t (b - a)
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = a[i] + t * (b[i] - a[i]);
    project(r);
    return r;
  };

  bool converged = false;
  while (true) {
    std::stable_sort(simplex.begin(), simplex.end(), [](const Vertex &a, const Vertex &b) { return a.f < b.f; });

    converged = true;
    for (std::size_t v = 1; v <= n && converged; ++v)
      for (std::size_t i = 0; i < n; ++i)
        if (std::abs(simplex[v].x[i] - simplex[0].x[i]) >= opt.xtol) {
          converged = false;
          break;
        }
    if (converged || evals >= opt.max_evaluations) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v].x[i];
    for (double &c : centroid) c /= static_cast<double>(n);

    Vertex &worst = simplex[n];
    const double f_best = simplex[0].f;
    const double f_second = simplex[n - 1].f;

    std::vector<double> xr = affine(centroid, worst.x, -kReflect);
    const double fr = eval(xr);

    if (fr < f_best) {
      std::vector<double> xe = affine(centroid, xr, kExpand);
      const double fe = eval(xe);
      if (fe < fr)
        worst = {std::move(xe), fe};
      else
        worst = {std::move(xr), fr};
      continue;
    }
    if (fr < f_second) {
      worst = {std::move(xr), fr};
      continue;
    }

    bool accepted = false;
    if (fr < worst.f) {
      std::vector<double> xc = affine(centroid, xr, kContract);
      const double fc = eval(xc);
      if (fc <= fr) {
        worst = {std::move(xc), fc};
        accepted = true;
      }
    } else {
      std::vector<double> xc = affine(centroid, worst.x, kContract);
      const double fc = eval(xc);
      if (fc < worst.f) {
        worst = {std::move(xc), fc};
        accepted = true;
      }
    }
    if (accepted) continue;

    for (std::size_t v = 1; v <= n; ++v) {
      simplex[v].x = affine(simplex[0].x, simplex[v].x, kShrink);
      simplex[v].f = eval(simplex[v].x);
    }
  }

  return {simplex[0].x, simplex[0].f, evals, converged};
}

}  // namespace bqc
