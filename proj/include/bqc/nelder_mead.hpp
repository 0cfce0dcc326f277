#pragma once

// Deterministic bounded Nelder-Mead simplex minimizer.
//
// Coefficients are the standard ones (reflect 1, expand 2, contract 1/2,
// shrink 1/2). Trial points are projected onto the box [lower, upper].
// Convergence: every vertex lies within `xtol` of the best vertex in every
// coordinate.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace bqc {

struct NelderMeadOptions {
  std::vector<double> step;   // initial simplex offset per coordinate
  std::vector<double> lower;  // empty = unbounded
  std::vector<double> upper;
  double xtol = 1e-4;
  std::size_t max_evaluations = 20000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

NelderMeadResult nelder_mead_minimize(const Objective &f, std::vector<double> x0, const NelderMeadOptions &opt);

}  // namespace bqc
