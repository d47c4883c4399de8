#ifndef HCVANET_SPATIAL_HPP
#define HCVANET_SPATIAL_HPP

#include <vector>

#include "hcvanet/model.hpp"
#include "hcvanet/rng.hpp"
#include "hcvanet/sampling.hpp"

namespace hcvanet {

struct Window {
  double begin = 0.0;
  double end = 0.0;
  double length() const { return end - begin; }
};

// Shrinks the observation window by `margin` on both sides. Edge-corrected
// estimators evaluate only at points inside the inner window while measuring
// distances against the full snapshot, so the margin must cover the largest
// distance being estimated.
Window inner_window(const Window& w, double margin);

// Nearest-neighbour distance for every snapshot point inside `inner`,
// measured against all points of the snapshot.
std::vector<double> nn_distances(const LaneSnapshot& lane,
                                 const Window& inner);

// Pooled nearest-neighbour distance CDF over all snapshots.
SummaryCurve empirical_nn_cdf(const std::vector<LaneSnapshot>& lanes,
                              double margin, const std::vector<double>& grid);

// Pooled empty-space (contact) CDF: distance from uniform probe locations in
// the inner window to the nearest snapshot point.
SummaryCurve empirical_contact_cdf(const std::vector<LaneSnapshot>& lanes,
                                   double margin,
                                   const std::vector<double>& grid,
                                   std::size_t probes_per_snapshot, Rng& rng);

// (1 - G) / (1 - F) on the common grid; NaN where 1 - F is below 1e-6.
SummaryCurve empirical_j(const SummaryCurve& g, const SummaryCurve& f);

// Ripley L: half the mean count of further points within distance r of an
// inner-window point, normalised by the pooled intensity estimate 1/mean gap.
SummaryCurve empirical_l(const std::vector<LaneSnapshot>& lanes, double margin,
                         const std::vector<double>& grid);

double pooled_intensity(const std::vector<LaneSnapshot>& lanes);

// Pointwise range of a family of curves sharing one grid. NaN entries are
// ignored; positions where every curve is NaN stay NaN.
struct Envelope {
  std::vector<double> r;
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<double> mean;
};

Envelope envelope(const std::vector<SummaryCurve>& curves);

// Sup-distance between two curves after resampling both onto the merged grid
// of their overlapping range by linear interpolation. NaN samples are skipped.
double ks_distance(const SummaryCurve& a, const SummaryCurve& b);

}  // namespace hcvanet

#endif
