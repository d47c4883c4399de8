#ifndef HCVANET_SAMPLING_HPP
#define HCVANET_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "hcvanet/model.hpp"
#include "hcvanet/rng.hpp"

namespace hcvanet {

// One lane of vehicle positions at a single observation instant.
struct LaneSnapshot {
  std::int64_t snapshot_id = 0;
  int lane_id = 0;
  double extent_begin = 0.0;
  double extent_end = 0.0;
  std::vector<double> positions;  // sorted ascending
};

// Inverse CDF of the equilibrium (stationary forward-recurrence) gap
// distribution: density lambda * (1 - G(x)) with G the gap CDF.
double equilibrium_gap_quantile(const HardcoreLaneModel& model, double u);

double sample_equilibrium_gap(const HardcoreLaneModel& model, Rng& rng);
double sample_gap(const HardcoreLaneModel& model, Rng& rng);

// Stationary lane on [begin, end): first point at begin + equilibrium gap,
// then renewal gaps. Statistically translation invariant on the interior.
LaneSnapshot sample_lane(const HardcoreLaneModel& model, double begin,
                         double end, Rng& rng);

// Lane conditioned on a point at `anchor` (Palm version): renewal gaps
// outward from the anchor in both directions. The anchor itself is included.
LaneSnapshot sample_lane_palm(const HardcoreLaneModel& model, double anchor,
                              double begin, double end, Rng& rng);

// Poisson lane of the given intensity on [begin, end), sorted.
LaneSnapshot sample_ppp_lane(double lambda, double begin, double end, Rng& rng);

}  // namespace hcvanet

#endif
