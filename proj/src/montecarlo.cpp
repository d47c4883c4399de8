#include "hcvanet/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hcvanet/kernels.hpp"
#include "hcvanet/sampling.hpp"
#include "json.hpp"

namespace hcvanet {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTailBudget = 1e-4;

double draw_gap(const GapLaw& law, Rng& rng) {
  if (const auto* model = std::get_if<HardcoreLaneModel>(&law)) {
    return model->hardcore() + rng.exponential(model->mu());
  }
  return std::get<EmpiricalCdf>(law).inverse_sample(rng.uniform());
}

// First gap of a stationary chain entering at the roadway edge. The
// equilibrium transform exists in closed form only for the parametric model;
// an empirical chain renews from the edge and mixes long before reaching the
// receiver neighbourhood.
double draw_entry_gap(const GapLaw& law, Rng& rng) {
  if (const auto* model = std::get_if<HardcoreLaneModel>(&law)) {
    return sample_equilibrium_gap(*model, rng);
  }
  return std::get<EmpiricalCdf>(law).inverse_sample(rng.uniform());
}

struct Accumulator {
  std::vector<double> dist;
  std::vector<double> fade;

  void clear() {
    dist.clear();
    fade.clear();
  }

  // Activity thinning happens before any fading is drawn; inactive
  // interferers consume exactly one uniform.
  void add(double distance, double power_scale, double xi, Rng& rng) {
    if (xi <= 0.0 || !rng.bernoulli(xi)) return;
    dist.push_back(distance);
    fade.push_back(power_scale * rng.exponential(1.0));
  }
};

double one_run_sir(const McScenario& sc, const McConfig& cfg, Rng& rng,
                   Accumulator& acc) {
  const double L = cfg.roadway_m;
  acc.clear();

  // Link: receiver at 0, transmitter at d on the positive axis.
  const double d = draw_gap(sc.own_lane, rng);

  if (sc.own_lane_interference) {
    // Own lane behind the transmitter, full power.
    double x = d + draw_gap(sc.own_lane, rng);
    while (x <= d + L) {
      acc.add(x, 1.0, sc.xi, rng);
      x += draw_gap(sc.own_lane, rng);
    }
    // Own lane in front of the receiver, backlobe.
    x = draw_gap(sc.own_lane, rng);
    while (x <= L) {
      acc.add(x, sc.g, sc.xi, rng);
      x += draw_gap(sc.own_lane, rng);
    }
  }

  for (const auto& lane : sc.other_lanes) {
    const double r0 = guard_zone(lane.ell, sc.phi);
    // Stationary chain across [-L, L]; the guard zone blanks |x| < r0.
    double p = -L + draw_entry_gap(lane.law, rng);
    while (p <= L) {
      const double dist = std::abs(p);
      if (dist > r0) {
        acc.add(dist, p >= 0.0 ? 1.0 : sc.g, sc.xi, rng);
      }
      p += draw_gap(lane.law, rng);
    }
  }

  const double interference = acc.dist.empty()
                                  ? 0.0
                                  : sum_pathloss(acc.dist.data(),
                                                 acc.fade.data(),
                                                 acc.dist.size(), sc.eta);
  const double signal = rng.exponential(1.0) * std::pow(d, -sc.eta);
  if (interference <= 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return signal / interference;
}

template <typename PerRun>
void run_sharded(std::size_t n_runs, unsigned jobs, PerRun per_run) {
  const unsigned workers =
      std::max(1u, std::min<unsigned>(jobs, std::thread::hardware_concurrency()
                                                ? std::thread::hardware_concurrency()
                                                : 1u));
  if (workers == 1) {
    for (std::size_t i = 0; i < n_runs; ++i) per_run(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([=]() {
      for (std::size_t i = w; i < n_runs; i += workers) per_run(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

double gap_law_mean(const GapLaw& law) {
  if (const auto* model = std::get_if<HardcoreLaneModel>(&law)) {
    return model->mean_gap();
  }
  return std::get<EmpiricalCdf>(law).mean();
}

void McScenario::validate() const {
  if (!(eta > 1.0)) throw std::invalid_argument("mc scenario: eta must be > 1");
  if (!(xi >= 0.0 && xi <= 1.0)) {
    throw std::invalid_argument("mc scenario: xi must be in [0, 1]");
  }
  if (!(g > 0.0 && g < 1.0)) {
    throw std::invalid_argument("mc scenario: g must be in (0, 1)");
  }
  if (!(phi > 0.0 && phi < kPi)) {
    throw std::invalid_argument("mc scenario: phi must be in (0, pi)");
  }
  if (theta_grid.empty()) {
    throw std::invalid_argument("mc scenario: empty theta grid");
  }
  double prev = 0.0;
  for (double t : theta_grid) {
    if (!(t > prev)) {
      throw std::invalid_argument(
          "mc scenario: theta grid must be positive increasing");
    }
    prev = t;
  }
  for (const auto& lane : other_lanes) {
    if (!(lane.ell > 0.0)) {
      throw std::invalid_argument("mc scenario: lane spacing must be positive");
    }
  }
}

void validate_truncation(const McConfig& config, const McScenario& scenario) {
  if (config.n_runs == 0) {
    throw std::invalid_argument("mc config: n_runs must be >= 1");
  }
  if (!(config.roadway_m > 0.0)) {
    throw std::invalid_argument("mc config: roadway length must be positive");
  }
  const double L = config.roadway_m;
  const double em1 = scenario.eta - 1.0;
  // Nearest-interferer scale per lane; the truncated tail of the mean
  // interference relative to the whole is (lead / L)^(eta - 1).
  const auto check = [&](double lead, const char* what) {
    if (!(lead < L)) {
      throw std::invalid_argument(
          std::string("mc config: roadway shorter than interferer lead for ") +
          what);
    }
    const double ratio = std::pow(lead / L, em1);
    if (ratio >= kTailBudget) {
      std::ostringstream os;
      os << "mc config: roadway " << L << " m truncates " << what
         << " interference by " << ratio << " of the mean (budget "
         << kTailBudget << "); lengthen the roadway";
      throw std::invalid_argument(os.str());
    }
  };
  if (scenario.own_lane_interference) {
    double own_lead = gap_law_mean(scenario.own_lane);
    if (const auto* m = std::get_if<HardcoreLaneModel>(&scenario.own_lane)) {
      own_lead += m->hardcore();
    }
    check(own_lead, "own-lane");
  }
  for (const auto& lane : scenario.other_lanes) {
    check(guard_zone(lane.ell, scenario.phi), "other-lane");
  }
}

OutageCurve simulate_outage(const McConfig& config,
                            const McScenario& scenario) {
  scenario.validate();
  validate_truncation(config, scenario);

  std::vector<double> sirs(config.n_runs);
  run_sharded(config.n_runs, config.jobs, [&](std::size_t i) {
    thread_local Accumulator acc;
    Rng rng(config.seed.substream(i));
    sirs[i] = one_run_sir(scenario, config, rng, acc);
  });
  std::sort(sirs.begin(), sirs.end());

  OutageCurve curve;
  curve.provenance = Provenance::MonteCarlo;
  curve.theta = scenario.theta_grid;
  curve.p_out.reserve(curve.theta.size());
  const double n = static_cast<double>(sirs.size());
  for (double theta : curve.theta) {
    const auto it = std::lower_bound(sirs.begin(), sirs.end(), theta);
    curve.p_out.push_back(static_cast<double>(it - sirs.begin()) / n);
  }
  return curve;
}

MomentTriple simulate_interference_moments(const McConfig& config,
                                           const McScenario& scenario,
                                           double d) {
  scenario.validate();
  validate_truncation(config, scenario);
  if (!(d > 0.0)) {
    throw std::invalid_argument("simulate_interference_moments: d must be > 0");
  }

  std::vector<double> samples(config.n_runs);
  run_sharded(config.n_runs, config.jobs, [&](std::size_t i) {
    thread_local Accumulator acc;
    Rng rng(config.seed.substream(i));
    acc.clear();
    double x = d + draw_gap(scenario.own_lane, rng);
    while (x <= d + config.roadway_m) {
      acc.add(x, 1.0, scenario.xi, rng);
      x += draw_gap(scenario.own_lane, rng);
    }
    samples[i] = acc.dist.empty()
                     ? 0.0
                     : sum_pathloss(acc.dist.data(), acc.fade.data(),
                                    acc.dist.size(), scenario.eta);
  });

  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= n;
  double m2 = 0.0;
  double m3 = 0.0;
  for (double s : samples) {
    const double e = s - mean;
    m2 += e * e;
    m3 += e * e * e;
  }
  m2 /= n;
  m3 /= n;
  MomentTriple m;
  m.mean = mean;
  m.variance = m2 * n / (n - 1.0);
  m.skewness = m3 / std::pow(m2, 1.5);
  return m;
}

std::string scenario_digest(const McScenario& scenario) {
  std::ostringstream os;
  os.precision(17);
  const auto law = [&](const GapLaw& l) {
    if (const auto* m = std::get_if<HardcoreLaneModel>(&l)) {
      os << "hc(" << m->lambda() << "," << m->hardcore() << ")";
    } else {
      const auto& e = std::get<EmpiricalCdf>(l);
      os << "ecdf(n=" << e.size() << ",min=" << e.min() << ",max=" << e.max()
         << ",mean=" << e.mean() << ")";
    }
  };
  os << "own=";
  law(scenario.own_lane);
  for (const auto& lane : scenario.other_lanes) {
    os << ";lane(ell=" << lane.ell << ",";
    law(lane.law);
    os << ")";
  }
  os << ";own_if=" << scenario.own_lane_interference
     << ";eta=" << scenario.eta << ";xi=" << scenario.xi
     << ";g=" << scenario.g << ";phi=" << scenario.phi
     << ";theta=" << scenario.theta_grid.size() << ","
     << scenario.theta_grid.front() << "," << scenario.theta_grid.back();
  // FNV-1a over the canonical parameter string.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : os.str()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string mc_manifest_json(const McConfig& config,
                             const McScenario& scenario) {
  nlohmann::json j;
  j["seed"] = config.seed.seed;
  j["stream"] = config.seed.stream;
  j["n_runs"] = config.n_runs;
  j["roadway_m"] = config.roadway_m;
  j["scenario_digest"] = scenario_digest(scenario);
  return j.dump(2);
}

}  // namespace hcvanet
