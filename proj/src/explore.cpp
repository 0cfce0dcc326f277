#include "bqc/explore.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "bqc/nelder_mead.hpp"

namespace bqc {

namespace {

constexpr double kFreeWidth = 1e-4;
constexpr double kSimplexStep = 0.05;
constexpr double kLimitFloor = 1e-12;
// Refinement must beat the lattice by more than round-off to count.
constexpr double kImprovementTol = 1e-12;

std::string range_text(const char *name, const GridRange &r) {
  std::ostringstream os;
  os << name << " range (" << r.lo << ", " << r.hi << ", " << r.steps << ")";
  return os.str();
}

void check_range(const char *name, const GridRange &r, double lo, double hi) {
  if (r.steps < 1 || (r.steps == 1 && r.lo != r.hi))
    throw DomainError(name, range_text(name, r) + ": need steps >= 2, or steps = 1 with lo = hi");
  if (!(r.lo <= r.hi)) throw DomainError(name, range_text(name, r) + ": lo exceeds hi");
  if (!(r.lo >= lo && r.hi <= hi)) throw DomainError(name, range_text(name, r) + ": outside the parameter domain");
}

void check_box(const char *name, const std::array<double, 2> &b, double lo, double hi) {
  if (!(b[0] <= b[1]) || !(b[0] >= lo) || !(b[1] <= hi)) {
    std::ostringstream os;
    os << name << " bounds [" << b[0] << ", " << b[1] << "] outside [" << lo << ", " << hi << "]";
    throw DomainError(name, os.str());
  }
}

void put(std::string &line, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, ",%.9g", v);
  line += buf;
}

}  // namespace

const char *to_string(Quantity q) {
  switch (q) {
    case Quantity::Ggm: return "ggm";
    case Quantity::ThreePi: return "three_pi";
    case Quantity::Gmc: return "gmc";
    case Quantity::Fill: return "fill";
  }
  return "?";
}

Quantity parse_quantity(const std::string &name) {
  for (Quantity q : {Quantity::Ggm, Quantity::ThreePi, Quantity::Gmc, Quantity::Fill})
    if (name == to_string(q)) return q;
  throw std::invalid_argument("unknown measure '" + name + "'");
}

double evaluate(Quantity q, const PureState3Q &s) {
  switch (q) {
    case Quantity::Ggm: return ggm(s);
    case Quantity::ThreePi: return three_pi(s).value;
    case Quantity::Gmc: return gmc_pure(s);
    case Quantity::Fill: return concurrence_fill(s);
  }
  return 0.0;
}

double evaluate(Quantity q, const ScatterParams &p) { return evaluate(q, final_state(p)); }

double GridRange::at(int i) const {
  if (steps == 1) return lo;
  if (i == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void SweepSpec::validate() const {
  if (mu_values.empty()) throw DomainError("mu", "sweep needs at least one mu value");
  for (double m : mu_values)
    if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("mu", "mu values must be positive and finite");
  check_range("theta", theta, kThetaMin, std::numbers::pi);
  check_range("eta", eta, 0.0, 0.5 * std::numbers::pi);
  if (!(beta >= 0.0 && beta < 2.0 * std::numbers::pi)) throw DomainError("beta", "beta outside [0, 2 pi)");
}

std::size_t SweepSpec::rows() const {
  return mu_values.size() * static_cast<std::size_t>(theta.steps) * static_cast<std::size_t>(eta.steps);
}

SweepError::SweepError(std::size_t row, const std::string &what)
    : std::runtime_error("row " + std::to_string(row) + ": " + what), row_(row) {}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char *env = std::getenv("BQC_THREADS")) {
    char *end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRow> sweep(const SweepSpec &spec) {
  spec.validate();
  const std::size_t n_theta = static_cast<std::size_t>(spec.theta.steps);
  const std::size_t n_eta = static_cast<std::size_t>(spec.eta.steps);
  const std::size_t total = spec.rows();
  std::vector<SweepRow> rows(total);

  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::optional<SweepError> failure;

  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      SweepRow &row = rows[i];
      row.mu = spec.mu_values[i / (n_theta * n_eta)];
      row.theta = spec.theta.at(static_cast<int>((i / n_eta) % n_theta));
      row.eta = spec.eta.at(static_cast<int>(i % n_eta));
      try {
        const PureState3Q s = final_state({row.theta, row.eta, spec.beta, row.mu});
        row.measures = measure_report(s);
        if (spec.monogamy) row.monogamy = monogamy_report(s, spec.discord_side);
      } catch (const std::exception &e) {
        std::lock_guard lock(failure_mutex);
        if (!failure || i < failure->row()) failure.emplace(i, e.what());
      }
    }
  };

  const unsigned n_threads = std::min<std::size_t>(resolve_threads(spec.threads), std::max<std::size_t>(total, 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(work);
  work();
  for (auto &t : pool) t.join();

  if (failure) throw *failure;
  return rows;
}

std::string csv_header(bool monogamy) {
  std::string h = "mu,theta,eta,ggm,three_pi,gmc,fill";
  if (monogamy) h += ",ef2_a_bc,ef2_ab,ef2_ac,e_res,d2_a_bc,d2_ab,d2_ac,d_res";
  return h;
}

void write_csv(std::ostream &os, const std::vector<SweepRow> &rows, bool monogamy) {
  os << csv_header(monogamy) << '\n';
  std::string line;
  for (const SweepRow &r : rows) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", r.mu);
    line = buf;
    for (double v : {r.theta, r.eta, r.measures.ggm, r.measures.three_pi, r.measures.gmc, r.measures.fill}) put(line, v);
    if (monogamy) {
      if (!r.monogamy) throw std::logic_error("write_csv: row has no monogamy terms");
      const MonogamyReport &m = *r.monogamy;
      for (double v : {m.ef2_A_BC, m.ef2_AB, m.ef2_AC, m.e_residual, m.d2_A_BC, m.d2_AB, m.d2_AC, m.d_residual})
        put(line, v);
    }
    os << line << '\n';
  }
}

void PeakBounds::validate() const {
  check_box("theta", theta, kThetaMin, std::numbers::pi);
  check_box("eta", eta, 0.0, 0.5 * std::numbers::pi);
  if (!(mu[0] > 0.0) || !(mu[0] <= mu[1]) || !std::isfinite(mu[1])) throw DomainError("mu", "mu bounds must satisfy 0 < lo <= hi");
}

PeakResult find_peak(Quantity q, const PeakBounds &bounds, int seed_grid) {
  bounds.validate();
  if (seed_grid < 2) throw std::invalid_argument("seed_grid must be at least 2");

  const std::array<std::array<double, 2>, 3> box{bounds.theta, bounds.eta, bounds.mu};
  std::size_t evaluations = 0;
  auto value_at = [&](const std::array<double, 3> &x) {
    ++evaluations;
    return evaluate(q, ScatterParams{x[0], x[1], 0.0, x[2]});
  };

  std::array<GridRange, 3> axes;
  for (std::size_t k = 0; k < 3; ++k) axes[k] = {box[k][0], box[k][1], box[k][0] == box[k][1] ? 1 : seed_grid};

  std::array<double, 3> best_x{};
  double best = -1.0;
  for (int i = 0; i < axes[0].steps; ++i)
    for (int j = 0; j < axes[1].steps; ++j)
      for (int k = 0; k < axes[2].steps; ++k) {
        const std::array<double, 3> x{axes[0].at(i), axes[1].at(j), axes[2].at(k)};
        const double v = value_at(x);
        if (v > best) {
          best = v;
          best_x = x;
        }
      }

  PeakResult out;
  out.grid_value = best;

  std::vector<std::size_t> free;
  for (std::size_t k = 0; k < 3; ++k)
    if (box[k][1] - box[k][0] > kFreeWidth) free.push_back(k);

  std::array<double, 3> x_star = best_x;
  double v_star = best;
  if (!free.empty()) {
    NelderMeadOptions opt;
    std::vector<double> x0;
    for (std::size_t k : free) {
      x0.push_back(best_x[k]);
      opt.step.push_back(std::min(kSimplexStep, 0.5 * (box[k][1] - box[k][0])));
      opt.lower.push_back(box[k][0]);
      opt.upper.push_back(box[k][1]);
    }
    auto objective = [&](std::span<const double> y) {
      std::array<double, 3> x = best_x;
      for (std::size_t n = 0; n < free.size(); ++n) x[free[n]] = y[n];
      return -value_at(x);
    };
    const NelderMeadResult r = nelder_mead_minimize(objective, x0, opt);
    out.converged = r.converged;
    if (-r.value > best + kImprovementTol) {
      v_star = -r.value;
      for (std::size_t n = 0; n < free.size(); ++n) x_star[free[n]] = r.x[n];
    } else {
      out.no_improvement = true;
    }
  } else {
    out.converged = true;
    out.no_improvement = true;
  }

  out.theta_star = x_star[0];
  out.eta_star = x_star[1];
  out.mu_star = x_star[2];
  out.value = v_star;
  out.evaluations = evaluations;
  return out;
}

double fill_relativistic_limit(double theta, double eta) {
  const double c2t = std::cos(2.0 * theta), c4t = std::cos(4.0 * theta);
  const double c6t = std::cos(6.0 * theta), c8t = std::cos(8.0 * theta);
  const double c2e = std::cos(2.0 * eta);
  const double se = std::sin(eta), s2e = std::sin(2.0 * eta), st = std::sin(theta);

  const double a = 17955.0 + 14280.0 * c2t + 540.0 * c4t - 8.0 * c6t +
                   c2e * (17885.0 + 14392.0 * c2t + 484.0 * c4t + 8.0 * c6t - c8t) + c8t;
  const double b = 99.0 + 29.0 * c2e + 2.0 * (28.0 * c2t + c4t) * se * se;

  const double arg = a * std::pow(se, 6) * std::pow(s2e, 4) * std::pow(st, 16) / std::pow(b, 8);
  return 256.0 * std::pow(std::max(arg, 0.0), 0.25) / std::pow(3.0, 0.25);
}

LimitCheck limit_check(double theta, double eta, double mu) {
  if (!(mu >= 1e3)) throw DomainError("mu", "limit check needs mu >= 1000");
  LimitCheck out;
  out.numeric = concurrence_fill(final_state({theta, eta, 0.0, mu}));
  out.limit = fill_relativistic_limit(theta, eta);
  const double diff = std::abs(out.numeric - out.limit);
  out.deviation = diff < kLimitFloor ? 0.0 : diff / std::max(out.limit, kLimitFloor);
  return out;
}

}  // namespace bqc
