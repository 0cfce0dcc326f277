#pragma once

// Parameter sweeps, peak search over (theta, eta, mu) and the closed-form
// relativistic limit of the concurrence fill.

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bqc/measures.hpp"
#include "bqc/monogamy.hpp"
#include "bqc/scattering_state.hpp"

namespace bqc {

enum class Quantity { Ggm, ThreePi, Gmc, Fill };

const char *to_string(Quantity q);
/// Accepts "ggm", "three_pi", "gmc", "fill". Throws std::invalid_argument.
Quantity parse_quantity(const std::string &name);

double evaluate(Quantity q, const PureState3Q &s);
double evaluate(Quantity q, const ScatterParams &p);

/// Evenly spaced grid lo, ..., hi. steps == 1 is allowed only for lo == hi.
struct GridRange {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 2;

  double at(int i) const;
};

struct SweepSpec {
  std::vector<double> mu_values;
  GridRange theta{kThetaMin, 3.14159265358979323846, 181};
  GridRange eta{0.0, 1.57079632679489661923, 91};
  double beta = 0.0;
  /// Adds the SEF and SQD terms and both residuals to every row.
  bool monogamy = false;
  DiscordSide discord_side = DiscordSide::Partner;
  /// 0 selects BQC_THREADS, then the hardware concurrency.
  unsigned threads = 0;

  /// Throws DomainError naming the offending field.
  void validate() const;
  std::size_t rows() const;
};

struct SweepRow {
  double mu = 0.0, theta = 0.0, eta = 0.0;
  MeasureReport measures;
  std::optional<MonogamyReport> monogamy;
};

/// Raised when a grid point fails; carries the row index.
class SweepError : public std::runtime_error {
 public:
  SweepError(std::size_t row, const std::string &what);
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

unsigned resolve_threads(unsigned requested);

/// Rows ordered mu-major, then theta, then eta, independent of thread count.
std::vector<SweepRow> sweep(const SweepSpec &spec);

/// Header line and rows, 9 significant digits, LF line endings.
void write_csv(std::ostream &os, const std::vector<SweepRow> &rows, bool monogamy);
std::string csv_header(bool monogamy);

struct PeakBounds {
  std::array<double, 2> theta{kThetaMin, 3.14159265358979323846};
  std::array<double, 2> eta{0.0, 1.57079632679489661923};
  std::array<double, 2> mu{0.01, 5.0};

  void validate() const;
};

struct PeakResult {
  double theta_star = 0.0, eta_star = 0.0, mu_star = 0.0;
  double value = 0.0;
  std::size_t evaluations = 0;
  /// Best value on the seed grid.
  double grid_value = 0.0;
  bool converged = false;
  /// Refinement did not beat the grid best; the grid point is returned.
  bool no_improvement = false;
};

/// Maximizes `q` over the box: seed_grid^3 lattice scan, then a bounded
/// simplex refinement of the free coordinates (width > 1e-4) from the best
/// lattice point. Deterministic.
PeakResult find_peak(Quantity q, const PeakBounds &bounds = {}, int seed_grid = 25);

double fill_relativistic_limit(double theta, double eta);

struct LimitCheck {
  double numeric = 0.0;
  double limit = 0.0;
  double deviation = 0.0;
};

/// |fill(theta, eta, 0, mu) - limit| / max(limit, 1e-12); mu >= 1e3.
LimitCheck limit_check(double theta, double eta, double mu);

}  // namespace bqc
