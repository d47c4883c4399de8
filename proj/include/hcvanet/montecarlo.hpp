#ifndef HCVANET_MONTECARLO_HPP
#define HCVANET_MONTECARLO_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hcvanet/interference.hpp"
#include "hcvanet/model.hpp"
#include "hcvanet/rng.hpp"
#include "hcvanet/traces.hpp"

namespace hcvanet {

// Gap distribution driving a simulated lane: parametric model or the
// empirical CDF extracted from a trace (sampled by linear interpolation).
using GapLaw = std::variant<HardcoreLaneModel, EmpiricalCdf>;

double gap_law_mean(const GapLaw& law);

struct McLane {
  GapLaw law;
  double ell = 0.0;
};

struct McScenario {
  // Always the link-distance law.
  GapLaw own_lane = HardcoreLaneModel::from_intensity(0.01, 0.0);
  std::vector<McLane> other_lanes;
  // Off when the scenario under study isolates other-lane interference.
  bool own_lane_interference = true;
  double eta = 3.0;
  double xi = 0.5;   // MC also admits xi = 0 (no interference)
  double g = 0.01;
  double phi = 0.15707963267948966;  // pi / 20
  std::vector<double> theta_grid;

  void validate() const;
};

struct McConfig {
  std::size_t n_runs = 100000;
  RngSeed seed;
  double roadway_m = 10000.0;  // simulated span on each side of the receiver
  unsigned jobs = 1;
};

// Throws when truncating interferers at the roadway ends would bias the mean
// interference of any lane by more than 1e-4 relative (analytic tail bound).
void validate_truncation(const McConfig& config, const McScenario& scenario);

// Per run: link distance from the own-lane gap law, receiver at 0 and
// transmitter at d; own-lane interferers renew outward one gap beyond the
// transmitter (full power) and one gap in front of the receiver (backlobe g);
// other lanes are stationary with interferers beyond the guard zone on both
// sides; activity thinning xi, unit-mean exponential fading. Runs use
// substreams keyed by run index, so the curve is independent of `jobs`.
OutageCurve simulate_outage(const McConfig& config, const McScenario& scenario);

// Interference from the chain behind a transmitter fixed at distance d;
// sample mean, variance, skewness across runs.
MomentTriple simulate_interference_moments(const McConfig& config,
                                           const McScenario& scenario,
                                           double d);

// Stable digest of the scenario parameters for the run manifest.
std::string scenario_digest(const McScenario& scenario);

std::string mc_manifest_json(const McConfig& config,
                             const McScenario& scenario);

}  // namespace hcvanet

#endif
