#include "bqc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "bqc/explore.hpp"

namespace bqc::cli {

namespace {

using nlohmann::ordered_json;

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string one_line(std::string s) {
  for (char &c : s)
    if (c == '\n' || c == '\r') c = ' ';
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

double to_radians(double v, bool degrees) { return degrees ? v / 180.0 * std::numbers::pi : v; }

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ordered_json document(const char *command, ordered_json params) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["params"] = std::move(params);
  return doc;
}

ordered_json params_json(const ScatterParams &p) {
  return {{"theta", p.theta}, {"eta", p.eta}, {"beta", p.beta}, {"mu", p.mu}};
}

ordered_json triple(const std::array<double, 3> &v) { return {{"A", v[0]}, {"B", v[1]}, {"C", v[2]}}; }

ordered_json measures_json(const MeasureReport &r) {
  const Negativities &n = r.negativities;
  return {{"ggm", r.ggm},
          {"three_pi", r.three_pi},
          {"gmc", r.gmc},
          {"gmc_rooted", r.gmc_rooted},
          {"fill", r.fill},
          {"c_one_vs_rest", triple(r.c_one_vs_rest)},
          {"pi_components", triple(r.pi_components)},
          {"negativities", {{"ab", n.ab}, {"ac", n.ac}, {"ba", n.ba}, {"bc", n.bc}, {"ca", n.ca}, {"cb", n.cb}}}};
}

ordered_json monogamy_json(const MonogamyReport &m, DiscordSide side) {
  return {{"ef2_A_BC", m.ef2_A_BC}, {"ef2_AB", m.ef2_AB},         {"ef2_AC", m.ef2_AC},
          {"e_residual", m.e_residual}, {"d2_A_BC", m.d2_A_BC}, {"d2_AB", m.d2_AB},
          {"d2_AC", m.d2_AC},       {"d_residual", m.d_residual},
          {"discord_side", side == DiscordSide::Partner ? "partner" : "focus"}};
}

struct PointFlags {
  double theta = 0.0, eta = 0.0, beta = 0.0, mu = 1.0;
  bool degrees = false;
  std::string format = "json";
  std::string side = "partner";

  ScatterParams params() const {
    ScatterParams p{to_radians(theta, degrees), to_radians(eta, degrees), to_radians(beta, degrees), mu};
    p.validate();
    return p;
  }
};

DiscordSide parse_side(const std::string &s) { return s == "focus" ? DiscordSide::Focus : DiscordSide::Partner; }

void add_point_flags(CLI::App *sub, PointFlags &f, bool with_eta) {
  sub->add_option("--theta", f.theta, "scattering angle")->required();
  if (with_eta) {
    sub->add_option("--eta", f.eta, "initial entanglement weight")->required();
    sub->add_option("--beta", f.beta, "initial relative phase")->capture_default_str();
  }
  sub->add_option("--mu", f.mu, "momentum |p| / m_e")->capture_default_str();
  sub->add_flag("--degrees", f.degrees, "angles in degrees");
}

void emit(std::ostream &out, const ordered_json &doc) { out << doc.dump(2) << '\n'; }

void emit_row_csv(std::ostream &out, const ScatterParams &p, const MeasureReport &m, const std::optional<MonogamyReport> &mono) {
  SweepRow row{p.mu, p.theta, p.eta, m, mono};
  write_csv(out, {row}, mono.has_value());
}

std::ofstream open_output(const std::string &path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw OutputError("cannot write '" + path + "'");
  return f;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Spin entanglement of Bhabha scattering with a spectator particle", "bqc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand help for every subcommand");

  PointFlags amp_f, meas_f, mono_f, lim_f;
  lim_f.mu = 1000.0;

  auto *amp = app.add_subcommand("amplitudes", "helicity amplitudes M(R,b;r,s)");
  add_point_flags(amp, amp_f, false);

  auto *meas = app.add_subcommand("measures", "tripartite entanglement measures at one point");
  add_point_flags(meas, meas_f, true);
  meas->add_option("--format", meas_f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  auto *mono = app.add_subcommand("monogamy", "SEF and SQD monogamy terms at one point");
  add_point_flags(mono, mono_f, true);
  mono->add_option("--format", mono_f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  mono->add_option("--discord-side", mono_f.side, "pairwise discord measured on the partner (B, C) or on A")
      ->check(CLI::IsMember({"partner", "focus"}))
      ->capture_default_str();

  SweepSpec spec;
  bool sweep_degrees = false;
  std::vector<std::string> quantities{"ggm", "three_pi", "gmc", "fill"};
  std::string sweep_out = "-";
  std::string sweep_side = "partner";
  auto *sw = app.add_subcommand("sweep", "grid sweep over (mu, theta, eta) to CSV");
  sw->add_option("--mu", spec.mu_values, "momentum values, comma separated")->required()->delimiter(',');
  sw->add_option("--theta-min", spec.theta.lo)->capture_default_str();
  sw->add_option("--theta-max", spec.theta.hi)->capture_default_str();
  sw->add_option("--theta-steps", spec.theta.steps)->capture_default_str();
  sw->add_option("--eta-min", spec.eta.lo)->capture_default_str();
  sw->add_option("--eta-max", spec.eta.hi)->capture_default_str();
  sw->add_option("--eta-steps", spec.eta.steps)->capture_default_str();
  sw->add_option("--beta", spec.beta)->capture_default_str();
  sw->add_option("--quantities", quantities, "ggm,three_pi,gmc,fill,sef_terms,sqd_terms,residuals")
      ->delimiter(',')
      ->check(CLI::IsMember({"ggm", "three_pi", "gmc", "fill", "sef_terms", "sqd_terms", "residuals"}));
  sw->add_option("--discord-side", sweep_side)->check(CLI::IsMember({"partner", "focus"}))->capture_default_str();
  sw->add_option("--out", sweep_out, "output path, - for stdout")->capture_default_str();
  sw->add_option("--threads", spec.threads, "worker threads (0: BQC_THREADS or all cores)")->capture_default_str();
  sw->add_flag("--degrees", sweep_degrees, "angles in degrees");

  std::string measure_name = "fill";
  PeakBounds bounds;
  int seed_grid = 25;
  bool peak_degrees = false;
  auto *pk = app.add_subcommand("peak", "maximize one measure over (theta, eta, mu)");
  pk->add_option("--measure", measure_name)->check(CLI::IsMember({"ggm", "three_pi", "gmc", "fill"}))->capture_default_str();
  pk->add_option("--theta-min", bounds.theta[0])->capture_default_str();
  pk->add_option("--theta-max", bounds.theta[1])->capture_default_str();
  pk->add_option("--eta-min", bounds.eta[0])->capture_default_str();
  pk->add_option("--eta-max", bounds.eta[1])->capture_default_str();
  pk->add_option("--mu-min", bounds.mu[0])->capture_default_str();
  pk->add_option("--mu-max", bounds.mu[1])->capture_default_str();
  pk->add_option("--seed-grid", seed_grid, "lattice points per axis")->check(CLI::Range(2, 400))->capture_default_str();
  pk->add_flag("--degrees", peak_degrees, "angles in degrees");

  auto *lim = app.add_subcommand("limit-check", "fill at large mu against the closed-form limit");
  add_point_flags(lim, lim_f, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << one_line(e.what()) << '\n';
    return kUsage;
  }

  const char *flag_prefix = "--";
  const char *flag_suffix = "";
  try {
    const Stopwatch clock;
    if (amp->parsed()) {
      const ScatterParams p{to_radians(amp_f.theta, amp_f.degrees), 0.0, 0.0, amp_f.mu};
      const Kinematics k = p.kinematics();
      ordered_json doc = document("amplitudes", {{"theta", p.theta}, {"mu", p.mu}});
      ordered_json table;
      for (Spin b : {Spin::R, Spin::L}) {
        const auto row = amplitude_row(b, k);
        table[to_string(b)] = {{"RR", row[0]}, {"RL", row[1]}, {"LR", row[2]}, {"LL", row[3]}};
      }
      doc["amplitudes"] = std::move(table);
      doc["timing_ms"] = clock.ms();
      emit(out, doc);
    } else if (meas->parsed() || mono->parsed()) {
      const bool with_mono = mono->parsed();
      const PointFlags &f = with_mono ? mono_f : meas_f;
      const ScatterParams p = f.params();
      const DiscordSide side = parse_side(f.side);
      const PureState3Q s = final_state(p);
      const MeasureReport m = measure_report(s);
      std::optional<MonogamyReport> mr;
      if (with_mono) mr = monogamy_report(s, side);
      if (f.format == "csv") {
        emit_row_csv(out, p, m, mr);
      } else {
        ordered_json doc = document(with_mono ? "monogamy" : "measures", params_json(p));
        doc["measures"] = measures_json(m);
        if (mr) doc["monogamy"] = monogamy_json(*mr, side);
        doc["timing_ms"] = clock.ms();
        emit(out, doc);
      }
    } else if (sw->parsed()) {
      flag_suffix = "-*";
      if (sweep_degrees) {
        for (double *v : {&spec.theta.lo, &spec.theta.hi, &spec.eta.lo, &spec.eta.hi, &spec.beta}) *v = to_radians(*v, true);
      }
      for (const auto &q : quantities)
        if (q == "sef_terms" || q == "sqd_terms" || q == "residuals") spec.monogamy = true;
      spec.discord_side = parse_side(sweep_side);
      spec.validate();
      std::optional<std::ofstream> file;
      if (sweep_out != "-") file = open_output(sweep_out);
      const auto rows = sweep(spec);
      std::ostream &dest = file ? static_cast<std::ostream &>(*file) : out;
      write_csv(dest, rows, spec.monogamy);
      if (file) {
        file->flush();
        if (!*file) throw OutputError("write to '" + sweep_out + "' failed");
      }
    } else if (pk->parsed()) {
      flag_suffix = "-*";
      if (peak_degrees) {
        for (double *v : {&bounds.theta[0], &bounds.theta[1], &bounds.eta[0], &bounds.eta[1]}) *v = to_radians(*v, true);
      }
      const Quantity q = parse_quantity(measure_name);
      const PeakResult r = find_peak(q, bounds, seed_grid);
      ordered_json doc = document("peak", {{"measure", measure_name},
                                           {"theta", {bounds.theta[0], bounds.theta[1]}},
                                           {"eta", {bounds.eta[0], bounds.eta[1]}},
                                           {"mu", {bounds.mu[0], bounds.mu[1]}},
                                           {"seed_grid", seed_grid}});
      doc["peak"] = {{"measure", measure_name},       {"theta_star", r.theta_star}, {"eta_star", r.eta_star},
                     {"mu_star", r.mu_star},          {"value", r.value},           {"grid_value", r.grid_value},
                     {"evaluations", r.evaluations},  {"converged", r.converged},   {"no_improvement", r.no_improvement}};
      doc["measures"] = measures_json(measure_report(final_state({r.theta_star, r.eta_star, 0.0, r.mu_star})));
      doc["timing_ms"] = clock.ms();
      emit(out, doc);
    } else if (lim->parsed()) {
      const ScatterParams p = lim_f.params();
      const LimitCheck c = limit_check(p.theta, p.eta, p.mu);
      ordered_json doc = document("limit-check", {{"theta", p.theta}, {"eta", p.eta}, {"mu", p.mu}});
      doc["limit_check"] = {{"numeric", c.numeric}, {"limit", c.limit}, {"deviation", c.deviation}};
      doc["timing_ms"] = clock.ms();
      emit(out, doc);
    }
  } catch (const DomainError &e) {
    err << "error: " << flag_prefix << e.param() << flag_suffix << ": " << one_line(e.what()) << '\n';
    return kUsage;
  } catch (const OutputError &e) {
    err << "error: --out: " << one_line(e.what()) << '\n';
    return kUnwritable;
  } catch (const std::invalid_argument &e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    err << "internal error: " << one_line(e.what()) << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace bqc::cli
