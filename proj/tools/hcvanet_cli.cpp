// Command-line front end: synthetic trace generation, model fitting, spatial
// statistics, analytic and simulated outage curves, goodness-of-fit, and the
// acceptance suite. Every source of randomness takes an explicit --seed.
//
// Exit codes: 0 success, 1 bad input, 2 numeric failure. `validate` returns
// the number of failing acceptance checks.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hcvanet/acceptance.hpp"
#include "hcvanet/fitting.hpp"
#include "hcvanet/interference.hpp"
#include "hcvanet/model.hpp"
#include "hcvanet/montecarlo.hpp"
#include "hcvanet/rng.hpp"
#include "hcvanet/sampling.hpp"
#include "hcvanet/spatial.hpp"
#include "hcvanet/traces.hpp"

namespace {

using nlohmann::json;
using namespace hcvanet;

constexpr double kPi = 3.141592653589793238462643383279502884;

// "lambda:c,lambda:c,..." -> one model per lane, list order = lane order.
std::vector<HardcoreLaneModel> parse_lanes(const std::string& s) {
  std::vector<HardcoreLaneModel> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("--lanes entry '" + item +
                                  "' is not lambda:c");
    }
    const double lambda = std::stod(item.substr(0, colon));
    const double c = std::stod(item.substr(colon + 1));
    out.push_back(HardcoreLaneModel::from_intensity(lambda, c));
  }
  if (out.empty()) throw std::invalid_argument("--lanes is empty");
  return out;
}

// "lo:hi:n" in dB -> linear thresholds.
std::vector<double> parse_theta_spec(const std::string& s) {
  double lo = 0.0, hi = 0.0;
  long n = 0;
  if (std::sscanf(s.c_str(), "%lf:%lf:%ld", &lo, &hi, &n) != 3 || n < 2) {
    throw std::invalid_argument("--theta-db must be lo:hi:n with n >= 2");
  }
  return theta_grid_db(lo, hi, static_cast<std::size_t>(n));
}

StatKind parse_kind(const std::string& s) {
  if (s == "pcf") return StatKind::PCF;
  if (s == "j") return StatKind::J;
  if (s == "k") return StatKind::K;
  if (s == "l") return StatKind::L;
  if (s == "g") return StatKind::G;
  if (s == "f") return StatKind::F;
  throw std::invalid_argument("--kind must be one of pcf,j,k,l,g,f");
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  return out;
}

void write_outage_csv(const std::string& path, const OutageCurve& curve) {
  auto out = open_out(path);
  out << "theta_db,p_out\n";
  char buf[80];
  for (std::size_t i = 0; i < curve.theta.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n",
                  linear_to_db(curve.theta[i]), curve.p_out[i]);
    out << buf;
  }
}

// Two-column CSV with a header row; extra columns ignored.
SummaryCurve read_curve_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("empty curve file: " + path);
  }
  SummaryCurve curve;
  curve.kind = StatKind::PCF;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    double x = 0.0, y = 0.0;
    if (std::sscanf(line.c_str(), "%lf,%lf", &x, &y) != 2) {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                  ": expected x,y");
    }
    curve.r.push_back(x);
    curve.value.push_back(y);
  }
  if (curve.r.empty()) throw std::invalid_argument("no rows in " + path);
  return curve;
}

struct ScenarioFlags {
  double eta = 3.0;
  double xi = 0.5;
  double g = 0.01;
  double ell = 4.0;
  double phi = kPi / 20.0;
  std::string theta_spec = "-10:20:61";
  int link_lane = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--eta", eta, "path-loss exponent (> 1)");
    cmd->add_option("--xi", xi, "transmit activity probability");
    cmd->add_option("--g", g, "backlobe attenuation factor");
    cmd->add_option("--ell", ell, "lateral spacing between adjacent lanes, m");
    cmd->add_option("--phi", phi, "antenna beamwidth, radians");
    cmd->add_option("--theta-db", theta_spec, "SIR threshold grid lo:hi:n, dB");
    cmd->add_option("--link-lane", link_lane, "index of the link lane");
  }

  json to_json() const {
    return json{{"eta", eta},   {"xi", xi},
                {"g", g},       {"ell", ell},
                {"phi", phi},   {"theta_db", theta_spec},
                {"link_lane", link_lane}};
  }
};

LinkScenario build_link_scenario(const std::vector<HardcoreLaneModel>& lanes,
                                 const ScenarioFlags& f) {
  if (f.link_lane < 0 || f.link_lane >= static_cast<int>(lanes.size())) {
    throw std::invalid_argument("--link-lane out of range");
  }
  LinkScenario sc;
  sc.own_lane = lanes[static_cast<std::size_t>(f.link_lane)];
  for (std::size_t i = 0; i < lanes.size(); ++i) {
    if (static_cast<int>(i) == f.link_lane) continue;
    const double sep =
        f.ell * std::abs(static_cast<double>(i) - f.link_lane);
    sc.other_lanes.push_back({lanes[i], sep});
  }
  sc.eta = f.eta;
  sc.xi = f.xi;
  sc.g = f.g;
  sc.phi = f.phi;
  sc.theta_grid = parse_theta_spec(f.theta_spec);
  sc.validate();
  return sc;
}

// Gaps for one lane, pooled across snapshots unless one snapshot is pinned,
// restricted to the window shrunk by the margin.
std::vector<double> gather_gaps(const TraceFile& trace, int lane_id,
                                std::optional<long long> snapshot,
                                double margin) {
  const Window inner =
      inner_window(Window{0.0, trace.meta.extent_m}, margin);
  std::vector<double> gaps;
  for (const LaneSnapshot* snap : trace.lane_snapshots(lane_id)) {
    if (snapshot && snap->snapshot_id != *snapshot) continue;
    try {
      const auto g = extract_gaps(*snap, inner);
      gaps.insert(gaps.end(), g.begin(), g.end());
    } catch (const std::invalid_argument&) {
      // Snapshots too sparse for the window contribute nothing.
    }
  }
  if (gaps.size() < 2) {
    throw std::invalid_argument("lane " + std::to_string(lane_id) +
                                ": fewer than 2 gaps in the window");
  }
  return gaps;
}

// ---------------------------------------------------------------------------

int cmd_gen_traces(const std::string& lanes_spec, std::size_t snapshots,
                   double length_km, std::uint64_t seed,
                   const std::string& name, const std::string& out) {
  const auto models = parse_lanes(lanes_spec);
  const TraceFile trace = generate_synthetic_trace(
      models, snapshots, length_km * 1000.0, RngSeed{seed, 0}, name);
  write_trace(trace, out);
  std::printf("wrote %zu snapshots x %zu lanes to %s (seed %llu)\n",
              trace.snapshot_ids().size(), models.size(), out.c_str(),
              static_cast<unsigned long long>(seed));
  return 0;
}

int cmd_fit(const std::string& trace_path, std::size_t drop_first,
            const std::string& method, std::vector<int> lanes,
            std::optional<long long> snapshot, double margin,
            const std::string& format, const std::string& out) {
  const TraceFile trace = parse_trace(trace_path, drop_first);
  if (lanes.empty()) lanes = trace.lane_ids();

  std::vector<FitResult> results;
  for (int lane : lanes) {
    const auto gaps = gather_gaps(trace, lane, snapshot, margin);
    if (method == "ppp") {
      results.push_back(fit_ppp_mle(gaps, lane));
    } else if (method == "mom") {
      results.push_back(fit_mom(gaps, lane));
    } else if (method == "mle") {
      results.push_back(fit_hc_mle(gaps, lane));
    } else if (method == "lsq") {
      results.push_back(fit_lsq(gaps, false, lane));
    } else if (method == "lsq-fixed") {
      results.push_back(fit_lsq(gaps, true, lane));
    } else {
      throw std::invalid_argument("--method must be ppp,mom,mle,lsq,lsq-fixed");
    }
  }

  for (const FitResult& r : results) {
    const std::string note =
        std::string(r.clamped ? " clamped" : "") +
        (r.error ? " error: " + r.message : std::string());
    std::printf("lane %d: method=%s lambda_hat=%.6g c_hat=%.6g mu_hat=%.6g%s\n",
                r.lane_id, fit_method_name(r.method).c_str(), r.lambda_hat,
                r.c_hat, r.mu_hat, note.c_str());
  }

  if (!out.empty()) {
    auto os = open_out(out);
    if (format == "json") {
      json arr = json::array();
      for (const FitResult& r : results) arr.push_back(json::parse(r.to_json()));
      os << arr.dump(2) << "\n";
    } else {
      os << "lane_id,method,lambda_hat,c_hat,mu_hat,rss,clamped,error\n";
      char buf[256];
      for (const FitResult& r : results) {
        std::snprintf(buf, sizeof buf, "%d,%s,%.17g,%.17g,%.17g,%.17g,%d,%d\n",
                      r.lane_id, fit_method_name(r.method).c_str(),
                      r.lambda_hat, r.c_hat, r.mu_hat, r.rss,
                      r.clamped ? 1 : 0, r.error ? 1 : 0);
        os << buf;
      }
    }
    std::printf("wrote %zu fits to %s\n", results.size(), out.c_str());
  }
  return 0;
}

int cmd_stats(const std::string& trace_path, std::size_t drop_first, int lane,
              double lambda, double hardcore, const std::string& kind_str,
              double r_max, double r_step, double margin, std::size_t probes,
              std::uint64_t seed, const std::string& out) {
  const StatKind kind = parse_kind(kind_str);
  const std::vector<double> grid = uniform_grid(r_max, r_step);
  const bool have_model = lambda > 0.0;
  std::optional<HardcoreLaneModel> model;
  if (have_model) model = HardcoreLaneModel::from_intensity(lambda, hardcore);

  if (trace_path.empty()) {
    if (!model) {
      throw std::invalid_argument("stats needs --trace or --lambda");
    }
    const SummaryCurve curve = model->curve(kind, grid);
    auto os = open_out(out);
    os << "r," << stat_kind_name(kind) << "\n";
    char buf[80];
    for (std::size_t i = 0; i < grid.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", curve.r[i],
                    curve.value[i]);
      os << buf;
    }
    std::printf("wrote model %s curve (%zu points) to %s\n",
                stat_kind_name(kind).c_str(), grid.size(), out.c_str());
    return 0;
  }

  if (kind == StatKind::PCF) {
    throw std::invalid_argument(
        "pcf is model-only; use --kind g,f,j,k,l with a trace");
  }

  const TraceFile trace = parse_trace(trace_path, drop_first);
  std::vector<LaneSnapshot> snaps;
  for (const LaneSnapshot* p : trace.lane_snapshots(lane)) snaps.push_back(*p);
  if (snaps.empty()) {
    throw std::invalid_argument("lane " + std::to_string(lane) +
                                " not present in trace");
  }
  Rng probe_rng(RngSeed{seed, 0xA11CE});

  const auto one_curve = [&](const std::vector<LaneSnapshot>& set,
                             Rng& rng) -> SummaryCurve {
    switch (kind) {
      case StatKind::G:
        return empirical_nn_cdf(set, margin, grid);
      case StatKind::F:
        return empirical_contact_cdf(set, margin, grid, probes, rng);
      case StatKind::J: {
        const SummaryCurve g = empirical_nn_cdf(set, margin, grid);
        const SummaryCurve f =
            empirical_contact_cdf(set, margin, grid, probes, rng);
        return empirical_j(g, f);
      }
      case StatKind::L:
        return empirical_l(set, margin, grid);
      case StatKind::K: {
        SummaryCurve l = empirical_l(set, margin, grid);
        for (double& v : l.value) v *= 2.0;
        l.kind = StatKind::K;
        return l;
      }
      default:
        throw std::invalid_argument("unsupported kind for traces");
    }
  };

  const SummaryCurve pooled = one_curve(snaps, probe_rng);
  std::vector<SummaryCurve> per_snapshot;
  per_snapshot.reserve(snaps.size());
  for (const LaneSnapshot& s : snaps) {
    per_snapshot.push_back(one_curve({s}, probe_rng));
  }
  const Envelope env = envelope(per_snapshot);

  std::optional<SummaryCurve> model_curve;
  if (model) model_curve = model->curve(kind, grid);

  auto os = open_out(out);
  os << "r,pooled,env_lo,env_hi,env_mean";
  if (model_curve) os << ",model";
  os << "\n";
  char buf[200];
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g", grid[i],
                  pooled.value[i], env.lo[i], env.hi[i], env.mean[i]);
    os << buf;
    if (model_curve) {
      std::snprintf(buf, sizeof buf, ",%.17g", model_curve->value[i]);
      os << buf;
    }
    os << "\n";
  }
  std::printf("wrote empirical %s curve for lane %d (%zu snapshots) to %s\n",
              stat_kind_name(kind).c_str(), lane, snaps.size(), out.c_str());
  return 0;
}

int cmd_outage(const std::string& lanes_spec, const ScenarioFlags& flags,
               const std::string& family, const std::string& out) {
  const auto lanes = parse_lanes(lanes_spec);
  const LinkScenario sc = build_link_scenario(lanes, flags);
  OutageCurve curve;
  if (family == "hc") {
    curve = outage_multilane_hc(sc);
  } else if (family == "ppp") {
    curve = outage_multilane_ppp(sc);
  } else {
    throw std::invalid_argument("--family must be hc or ppp");
  }
  write_outage_csv(out, curve);

  json manifest = flags.to_json();
  manifest["command"] = "outage";
  manifest["lanes"] = lanes_spec;
  manifest["family"] = family;
  manifest["provenance"] = provenance_name(curve.provenance);
  auto ms = open_out(out + ".manifest.json");
  ms << manifest.dump(2) << "\n";

  std::printf("wrote %s outage curve (%zu thresholds) to %s\n", family.c_str(),
              curve.theta.size(), out.c_str());
  return 0;
}

int cmd_simulate(const std::string& lanes_spec, const std::string& trace_path,
                 std::size_t drop_first, const ScenarioFlags& flags,
                 std::size_t runs, std::uint64_t seed, int jobs,
                 double roadway_m, const std::string& out) {
  McScenario sc;
  std::string source;
  if (!trace_path.empty()) {
    const TraceFile trace = parse_trace(trace_path, drop_first);
    const std::vector<int> ids = trace.lane_ids();
    if (flags.link_lane < 0 ||
        flags.link_lane >= static_cast<int>(ids.size())) {
      throw std::invalid_argument("--link-lane out of range for trace lanes");
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      EmpiricalCdf cdf(pooled_gaps(trace, ids[i]));
      if (static_cast<int>(i) == flags.link_lane) {
        sc.own_lane = std::move(cdf);
      } else {
        const double sep =
            flags.ell * std::abs(static_cast<double>(i) - flags.link_lane);
        sc.other_lanes.push_back({std::move(cdf), sep});
      }
    }
    source = "trace:" + trace_path;
  } else if (!lanes_spec.empty()) {
    const auto lanes = parse_lanes(lanes_spec);
    if (flags.link_lane < 0 ||
        flags.link_lane >= static_cast<int>(lanes.size())) {
      throw std::invalid_argument("--link-lane out of range");
    }
    for (std::size_t i = 0; i < lanes.size(); ++i) {
      if (static_cast<int>(i) == flags.link_lane) {
        sc.own_lane = lanes[i];
      } else {
        const double sep =
            flags.ell * std::abs(static_cast<double>(i) - flags.link_lane);
        sc.other_lanes.push_back({lanes[i], sep});
      }
    }
    source = "model:" + lanes_spec;
  } else {
    throw std::invalid_argument("simulate needs --lanes or --trace");
  }
  sc.eta = flags.eta;
  sc.xi = flags.xi;
  sc.g = flags.g;
  sc.phi = flags.phi;
  sc.theta_grid = parse_theta_spec(flags.theta_spec);

  McConfig cfg;
  cfg.n_runs = runs;
  cfg.seed = RngSeed{seed, 0};
  cfg.jobs = jobs;
  cfg.roadway_m = roadway_m;

  const OutageCurve curve = simulate_outage(cfg, sc);
  write_outage_csv(out, curve);

  json manifest = json::parse(mc_manifest_json(cfg, sc));
  manifest["command"] = "simulate";
  manifest["source"] = source;
  manifest["scenario_flags"] = flags.to_json();
  manifest["provenance"] = provenance_name(curve.provenance);
  auto ms = open_out(out + ".manifest.json");
  ms << manifest.dump(2) << "\n";

  std::printf("simulated %zu runs (seed %llu, jobs %d) to %s\n", runs,
              static_cast<unsigned long long>(seed), jobs, out.c_str());
  return 0;
}

int cmd_gof(const std::string& a_path, const std::string& b_path) {
  const SummaryCurve a = read_curve_csv(a_path);
  const SummaryCurve b = read_curve_csv(b_path);
  const double ks = ks_distance(a, b);
  std::printf("KS(%s, %s) = %.6f\n", a_path.c_str(), b_path.c_str(), ks);
  return 0;
}

int cmd_validate(int criterion, const std::string& out) {
  std::vector<CriterionResult> results;
  if (criterion > 0) {
    results.push_back(run_criterion(criterion));
  } else {
    results = run_all_criteria();
  }
  int failures = 0;
  std::ostringstream report;
  for (const auto& r : results) {
    failures += r.pass ? 0 : 1;
    char line[1024];
    std::snprintf(line, sizeof line, "[%s] criterion %d: %s | %s (%.1fs)\n",
                  r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                  r.detail.c_str(), r.seconds);
    report << line;
    std::fputs(line, stdout);
  }
  report << failures << " of " << results.size() << " checks failed\n";
  if (!out.empty()) {
    auto os = open_out(out);
    os << report.str();
    std::printf("wrote report to %s\n", out.c_str());
  }
  return failures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Hardcore-lane vehicular network toolkit: trace generation, fitting, "
      "spatial statistics, outage prediction, simulation"};
  app.require_subcommand(1);

  // gen-traces
  auto* gen = app.add_subcommand("gen-traces", "generate a synthetic trace");
  std::string gen_lanes, gen_name = "synthetic", gen_out;
  std::size_t gen_snapshots = 1200;
  double gen_length_km = 10.0;
  std::uint64_t gen_seed = 0;
  gen->add_option("--lanes", gen_lanes, "lambda:c per lane, comma separated")
      ->required();
  gen->add_option("--snapshots", gen_snapshots, "snapshots to generate");
  gen->add_option("--length-km", gen_length_km, "roadway extent, km");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--name", gen_name, "trace name for the metadata sidecar");
  gen->add_option("--out", gen_out, "output CSV path")->required();

  // fit
  auto* fit = app.add_subcommand("fit", "fit lane models to a trace");
  std::string fit_trace, fit_method, fit_format = "csv", fit_out;
  std::size_t fit_drop = 600;
  std::vector<int> fit_lanes;
  long long fit_snapshot = -1;
  double fit_margin = 0.0;
  fit->add_option("--trace", fit_trace, "trace CSV path")->required();
  fit->add_option("--drop-first", fit_drop, "leading snapshots to drop");
  fit->add_option("--method", fit_method, "ppp, mom, mle, lsq, lsq-fixed")
      ->required();
  fit->add_option("--lane", fit_lanes, "lane id (repeatable; default all)");
  fit->add_option("--snapshot", fit_snapshot,
                  "restrict to one snapshot id (default: pool all)");
  fit->add_option("--window-margin", fit_margin, "margin trimmed per side, m");
  fit->add_option("--format", fit_format, "csv or json");
  fit->add_option("--out", fit_out, "write the fit table here");

  // stats
  auto* stats = app.add_subcommand(
      "stats", "summary statistics from a trace or a model");
  std::string stats_trace, stats_kind, stats_out;
  std::size_t stats_drop = 600, stats_probes = 200;
  int stats_lane = 0;
  double stats_lambda = 0.0, stats_c = 0.0;
  double stats_rmax = 200.0, stats_rstep = 1.0, stats_margin = 100.0;
  std::uint64_t stats_seed = 0;
  stats->add_option("--trace", stats_trace, "trace CSV path");
  stats->add_option("--drop-first", stats_drop, "leading snapshots to drop");
  stats->add_option("--lane", stats_lane, "lane id");
  stats->add_option("--lambda", stats_lambda, "model intensity, 1/m");
  stats->add_option("--hardcore", stats_c, "model hardcore distance, m");
  stats->add_option("--kind", stats_kind, "pcf, j, k, l, g, f")->required();
  stats->add_option("--r-max", stats_rmax, "grid upper end, m");
  stats->add_option("--r-step", stats_rstep, "grid step, m");
  stats->add_option("--window-margin", stats_margin,
                    "edge margin for empirical statistics, m");
  stats->add_option("--probes", stats_probes, "probe points per snapshot");
  stats->add_option("--seed", stats_seed, "probe RNG seed");
  stats->add_option("--out", stats_out, "output CSV path")->required();

  // outage
  auto* outage =
      app.add_subcommand("outage", "analytic outage probability curve");
  std::string outage_lanes, outage_family = "hc", outage_out;
  ScenarioFlags outage_flags;
  outage->add_option("--lanes", outage_lanes, "lambda:c per lane")->required();
  outage_flags.add_to(outage);
  outage->add_option("--family", outage_family, "hc or ppp");
  outage->add_option("--out", outage_out, "output CSV path")->required();

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte-Carlo outage curve");
  std::string sim_lanes, sim_trace, sim_out;
  std::size_t sim_drop = 600, sim_runs = 100000;
  std::uint64_t sim_seed = 0;
  int sim_jobs = 1;
  double sim_roadway = 10000.0;
  ScenarioFlags sim_flags;
  sim->add_option("--lanes", sim_lanes, "lambda:c per lane (model source)");
  sim->add_option("--trace", sim_trace, "trace CSV path (empirical source)");
  sim->add_option("--drop-first", sim_drop, "leading snapshots to drop");
  sim_flags.add_to(sim);
  sim->add_option("--runs", sim_runs, "Monte-Carlo runs");
  sim->add_option("--seed", sim_seed, "RNG seed");
  sim->add_option("--jobs", sim_jobs, "worker threads (result-invariant)");
  sim->add_option("--roadway-m", sim_roadway, "simulated roadway per side, m");
  sim->add_option("--out", sim_out, "output CSV path")->required();

  // gof
  auto* gof =
      app.add_subcommand("gof", "Kolmogorov-Smirnov distance of two curves");
  std::string gof_a, gof_b;
  gof->add_option("--a", gof_a, "first curve CSV")->required();
  gof->add_option("--b", gof_b, "second curve CSV")->required();

  // validate
  auto* validate = app.add_subcommand(
      "validate",
      "run the acceptance suite and write a report; exit code = failures");
  int val_criterion = 0;
  std::string val_out;
  validate->add_option("--criterion", val_criterion, "run one check (1..9)");
  validate->add_option("--out", val_out, "report path");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) {
      return cmd_gen_traces(gen_lanes, gen_snapshots, gen_length_km, gen_seed,
                            gen_name, gen_out);
    }
    if (fit->parsed()) {
      std::optional<long long> snapshot;
      if (fit_snapshot >= 0) snapshot = fit_snapshot;
      return cmd_fit(fit_trace, fit_drop, fit_method, fit_lanes, snapshot,
                     fit_margin, fit_format, fit_out);
    }
    if (stats->parsed()) {
      return cmd_stats(stats_trace, stats_drop, stats_lane, stats_lambda,
                       stats_c, stats_kind, stats_rmax, stats_rstep,
                       stats_margin, stats_probes, stats_seed, stats_out);
    }
    if (outage->parsed()) {
      return cmd_outage(outage_lanes, outage_flags, outage_family, outage_out);
    }
    if (sim->parsed()) {
      return cmd_simulate(sim_lanes, sim_trace, sim_drop, sim_flags, sim_runs,
                          sim_seed, sim_jobs, sim_roadway, sim_out);
    }
    if (gof->parsed()) return cmd_gof(gof_a, gof_b);
    if (validate->parsed()) return cmd_validate(val_criterion, val_out);
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numeric failure: %s\n", e.what());
    return 2;
  }
}
