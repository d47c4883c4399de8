#ifndef HCVANET_TRACES_HPP
#define HCVANET_TRACES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hcvanet/model.hpp"
#include "hcvanet/rng.hpp"
#include "hcvanet/sampling.hpp"
#include "hcvanet/spatial.hpp"

namespace hcvanet {

struct LaneGroundTruth {
  int lane_id = 0;
  double lambda = 0.0;
  double c = 0.0;
};

struct TraceMetadata {
  std::string name;
  double granularity_s = 1.0;
  double extent_m = 0.0;
  std::vector<int> lane_ids;
  std::vector<LaneGroundTruth> ground_truth;  // empty for real traces
};

// Snapshot rows grouped per (snapshot_id, lane_id), ordered by that key.
// Canonical file format: CSV with header `snapshot_id,lane_id,position_m`,
// UTF-8, LF line endings, positions in meters with 6 decimal places, plus a
// `<base>.meta.json` sidecar. The parse/write round trip is lossless.
struct TraceFile {
  TraceMetadata meta;
  std::vector<LaneSnapshot> snapshots;
  std::vector<std::string> warnings;

  std::vector<int> lane_ids() const;
  std::vector<std::int64_t> snapshot_ids() const;
  const LaneSnapshot* find(std::int64_t snapshot_id, int lane_id) const;
  std::vector<const LaneSnapshot*> lane_snapshots(int lane_id) const;
};

// `drop_first` discards that many distinct leading snapshot ids (warm-up
// interval of the recording). Malformed rows fail with the line number;
// duplicate positions within a (snapshot, lane) collapse with a warning.
TraceFile parse_trace(const std::string& path, std::size_t drop_first = 0);

void write_trace(const TraceFile& trace, const std::string& path);

// One lane model per entry; lane_id is the list index. Ground truth is
// recorded in the metadata. Positions are rounded to the file precision so
// the in-memory object equals its own parse.
TraceFile generate_synthetic_trace(const std::vector<HardcoreLaneModel>& models,
                                   std::size_t n_snapshots, double extent_m,
                                   RngSeed seed,
                                   const std::string& name = "synthetic");

// Consecutive-position differences restricted to the window.
std::vector<double> extract_gaps(const LaneSnapshot& lane,
                                 const Window& window);

// Gaps pooled over all snapshots of one lane, full extent window.
std::vector<double> pooled_gaps(const TraceFile& trace, int lane_id);

// Piecewise-linear empirical CDF with O(1) inverse sampling: quantile knots
// are uniform in probability, so the inverse is an index plus a lerp.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> sample);

  double inverse_sample(double u) const;  // u in [0, 1]; 0 -> min, 1 -> max
  double cdf(double x) const;
  double min() const { return support_.front(); }
  double max() const { return support_.back(); }
  double mean() const { return mean_; }
  std::size_t size() const { return support_.size(); }

 private:
  std::vector<double> support_;
  double mean_ = 0.0;
};

}  // namespace hcvanet

#endif
