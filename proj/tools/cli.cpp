#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "dualqkd/dualqkd.hpp"

namespace dualqkd::cli {
namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

std::string km(const std::optional<double>& v) {
  if (!v) return "none";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *v);
  return buf;
}

std::string km(const std::optional<Crossing>& c) {
  if (!c) return "none";
  std::string s = km(std::optional<double>(c->km));
  if (c->touching) s += " (touching, grid-cell midpoint)";
  return s;
}

// Human-readable variants for the figure summary.
std::string distance(const std::optional<double>& v) { return v ? km(v) + " km" : "none"; }

std::string distance(const std::optional<Crossing>& c) {
  if (!c) return "none";
  std::string s = km(std::optional<double>(c->km)) + " km";
  if (c->touching) s += " (touching, grid-cell midpoint)";
  return s;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot write '" + path + "'");
  file << text;
}

struct Options {
  std::string config;
  std::string config_b;
  std::string out_path;
  std::optional<double> length;
  double l_min = 0.0;
  double l_max = 250.0;
  double step = 1.0;
  double tolerance = 0.01;
  int figure_id = 0;
  double e_det = 0.0;
  double f_ec = 1.22;
  double p = 0.0;
  int k = 1;
  double qber_budget = 0.01;
  double rep_rate = 1e9;
  double mu = 1.0;
  double channel_loss_db = 21.0;
  double g_bob = 0.16;
  double switch_loss_db = 3.0;
  double eta_d = 0.5;
  double target_counts = 1e6;
};

void cmd_rate(const Options& o, std::ostream& out) {
  const Scenario s = load_scenario(o.config);
  const double length = o.length.value_or(s.link.length);
  out << "length_km=" << km(std::optional<double>(length)) << " rate_bps=" << sci(evaluate(s, length))
      << '\n';
}

void cmd_sweep(const Options& o, std::ostream& out) {
  const Scenario s = load_scenario(o.config);
  write_output(o.out_path, format_rate_csv(table_for(s, sweep(s, o.l_min, o.l_max, o.step))), out);
}

void cmd_figure(const Options& o, std::ostream& out) {
  const FigurePreset f = figure_preset(o.figure_id);
  RateTable table;
  table.dual = sweep(f.dual, f.l_min, f.l_max, f.step);
  table.fast = sweep(f.fast, f.l_min, f.l_max, f.step);
  table.slow = sweep(f.slow, f.l_min, f.l_max, f.step);
  write_output(o.out_path, format_rate_csv(table), out);

  // Summary goes to stdout unless the CSV already does.
  std::ostringstream summary;
  const auto singles = f.singles();
  const SearchOptions search = f.search();
  summary << "figure " << f.id << ": " << f.title << '\n'
          << "  max distance dual:        " << distance(max_secure_distance(f.dual, f.l_max, search)) << '\n'
          << "  max distance fast alone:  " << distance(max_secure_distance(f.fast, f.l_max, search)) << '\n'
          << "  max distance slow alone:  " << distance(max_secure_distance(f.slow, f.l_max, search)) << '\n'
          << "  dual advantage ends at:   "
          << distance(crossover_distance(rate_function(f.dual), envelope(singles), f.l_max, search)) << '\n';
  if (f.dual_no_pa) {
    summary << "  dual (no PA) advantage ends at: "
            << distance(crossover_distance(rate_function(*f.dual_no_pa), envelope(singles), f.l_max,
                                           search))
            << '\n';
  }
  if (o.out_path != "-") out << summary.str();
}

void cmd_maxdist(const Options& o, std::ostream& out) {
  const Scenario s = load_scenario(o.config);
  out << "max_secure_distance_km=" << km(max_secure_distance(s, o.l_max, {o.step, o.tolerance}))
      << '\n';
}

void cmd_crossover(const Options& o, std::ostream& out) {
  const Scenario a = load_scenario(o.config);
  const Scenario b = load_scenario(o.config_b);
  out << "crossover_km=" << km(crossover_distance(a, b, o.l_max, {o.step, o.tolerance})) << '\n';
}

void cmd_mu_opt(const Options& o, std::ostream& out) {
  const double mu = optimal_mu(o.e_det, o.f_ec);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", mu);
  out << "mu_opt=" << buf << '\n';
}

void cmd_schedule(const Options& o, std::ostream& out, std::ostream& err) {
  const ChoiceProbabilities c = choice_probabilities(o.p, o.k);
  const double qber = multi_pulse_qber(o.p, o.k);
  if (!multi_pulse_model_valid(o.p, o.k)) {
    err << "warning: k*p = " << o.k * o.p
        << " is outside the small-kp regime; the QBER estimate is unreliable\n";
  }
  const auto p_max = max_slow_probability(o.k, o.qber_budget);
  const double eta = slow_detector_efficiency(o.channel_loss_db, o.g_bob, o.switch_loss_db, o.eta_d);
  out << "P0=" << sci(c.none) << '\n'
      << "P1=" << sci(c.once) << '\n'
      << "PM=" << sci(c.multiple) << '\n'
      << "multi_pulse_qber=" << sci(qber) << '\n'
      << "p_max=" << (p_max ? sci(*p_max) : std::string("unconstrained")) << '\n';
  if (o.p > 0.0) {
    const double seconds = accumulation_time(o.p, o.rep_rate, o.mu, eta, o.target_counts);
    out << "slow_detector_efficiency=" << sci(eta) << '\n'
        << "accumulation_time_s=" << sci(seconds) << '\n'
        << "accumulation_time_h=" << sci(seconds / 3600.0) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secret key rates for single and dual-detector QKD receivers", "dualqkd"};
  app.require_subcommand(1);
  Options o;

  auto* rate = app.add_subcommand("rate", "Key rate of a scenario at one fiber length");
  rate->add_option("--config", o.config, "Scenario JSON file")->required();
  rate->add_option("--length", o.length, "Fiber length in km (default: link.length_km)");

  auto* sw = app.add_subcommand("sweep", "Key rate over a distance grid, written as CSV");
  sw->add_option("--config", o.config, "Scenario JSON file")->required();
  sw->add_option("--lmin", o.l_min, "First distance, km");
  sw->add_option("--lmax", o.l_max, "Last distance, km");
  sw->add_option("--step", o.step, "Grid step, km");
  sw->add_option("--out", o.out_path, "Output CSV path ('-' for stdout)")->required();

  auto* fig = app.add_subcommand("figure", "Reproduce one of the built-in figures 1-9");
  fig->add_option("--id", o.figure_id, "Figure number")->required();
  fig->add_option("--out", o.out_path, "Output CSV path ('-' for stdout)")->required();

  auto* md = app.add_subcommand("maxdist", "Largest distance with a positive key rate");
  md->add_option("--config", o.config, "Scenario JSON file")->required();
  md->add_option("--lmax", o.l_max, "Search limit, km");
  md->add_option("--step", o.step, "Coarse grid step, km");

  auto* co = app.add_subcommand("crossover", "Distance where scenario A stops beating B");
  co->add_option("--config-a", o.config, "Scenario A JSON file")->required();
  co->add_option("--config-b", o.config_b, "Scenario B JSON file")->required();
  co->add_option("--lmax", o.l_max, "Search limit, km");
  co->add_option("--step", o.step, "Coarse grid step, km");

  auto* mu = app.add_subcommand("mu-opt", "Optimal decoy signal intensity");
  mu->add_option("--edet", o.e_det, "Misalignment error e_det")->required();
  mu->add_option("--f", o.f_ec, "Error-correction inefficiency f")->required();

  auto* sch = app.add_subcommand("schedule", "Slow-detector routing analysis");
  sch->add_option("--p", o.p, "Probability of routing a pulse to the slow detector")->required();
  sch->add_option("--k", o.k, "Pulses per slow-detector response window")->required();
  sch->add_option("--qber-budget", o.qber_budget, "Allowed extra QBER for p_max");
  sch->add_option("--rep-rate", o.rep_rate, "Pulse rate, Hz");
  sch->add_option("--mu", o.mu, "Mean photon number per pulse");
  sch->add_option("--channel-loss-db", o.channel_loss_db, "Fiber loss, dB");
  sch->add_option("--g-bob", o.g_bob, "Receiver optical transmittance");
  sch->add_option("--switch-loss-db", o.switch_loss_db, "Switch insertion loss, dB");
  sch->add_option("--eta-d", o.eta_d, "Slow detector efficiency");
  sch->add_option("--target-counts", o.target_counts, "Counts needed for parameter estimation");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (rate->parsed()) cmd_rate(o, out);
    if (sw->parsed()) cmd_sweep(o, out);
    if (fig->parsed()) cmd_figure(o, out);
    if (md->parsed()) cmd_maxdist(o, out);
    if (co->parsed()) cmd_crossover(o, out);
    if (mu->parsed()) cmd_mu_opt(o, out);
    if (sch->parsed()) cmd_schedule(o, out, err);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace dualqkd::cli
