#include "hcvanet/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hcvanet {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Fraction of sorted `values` that are <= each grid point.
std::vector<double> ecdf_on_grid(std::vector<double> values,
                                 const std::vector<double>& grid) {
  std::sort(values.begin(), values.end());
  std::vector<double> out(grid.size(), kNaN);
  if (values.empty()) return out;
  const double n = static_cast<double>(values.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto it =
        std::upper_bound(values.begin(), values.end(), grid[i]);
    out[i] = static_cast<double>(it - values.begin()) / n;
  }
  return out;
}

double distance_to_nearest(const std::vector<double>& sorted, double x) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  double best = std::numeric_limits<double>::infinity();
  if (it != sorted.end()) best = std::min(best, *it - x);
  if (it != sorted.begin()) best = std::min(best, x - *(it - 1));
  return best;
}

void check_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("empty evaluation grid");
}

}  // namespace

Window inner_window(const Window& w, double margin) {
  if (!(margin >= 0.0)) {
    throw std::invalid_argument("inner_window: margin must be >= 0");
  }
  Window in{w.begin + margin, w.end - margin};
  if (!(in.end > in.begin)) {
    throw std::invalid_argument("inner_window: margin swallows the window");
  }
  return in;
}

std::vector<double> nn_distances(const LaneSnapshot& lane,
                                 const Window& inner) {
  std::vector<double> out;
  const auto& p = lane.positions;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < inner.begin || p[i] > inner.end) continue;
    double best = std::numeric_limits<double>::infinity();
    if (i > 0) best = std::min(best, p[i] - p[i - 1]);
    if (i + 1 < p.size()) best = std::min(best, p[i + 1] - p[i]);
    if (std::isfinite(best)) out.push_back(best);
  }
  return out;
}

SummaryCurve empirical_nn_cdf(const std::vector<LaneSnapshot>& lanes,
                              double margin, const std::vector<double>& grid) {
  check_grid(grid);
  std::vector<double> pooled;
  for (const auto& lane : lanes) {
    const Window in =
        inner_window({lane.extent_begin, lane.extent_end}, margin);
    auto d = nn_distances(lane, in);
    pooled.insert(pooled.end(), d.begin(), d.end());
  }
  return {StatKind::G, grid, ecdf_on_grid(std::move(pooled), grid)};
}

SummaryCurve empirical_contact_cdf(const std::vector<LaneSnapshot>& lanes,
                                   double margin,
                                   const std::vector<double>& grid,
                                   std::size_t probes_per_snapshot, Rng& rng) {
  check_grid(grid);
  if (probes_per_snapshot == 0) {
    throw std::invalid_argument("empirical_contact_cdf: zero probes");
  }
  std::vector<double> pooled;
  pooled.reserve(lanes.size() * probes_per_snapshot);
  for (const auto& lane : lanes) {
    const Window in =
        inner_window({lane.extent_begin, lane.extent_end}, margin);
    for (std::size_t k = 0; k < probes_per_snapshot; ++k) {
      const double x = in.begin + in.length() * rng.uniform();
      const double d = distance_to_nearest(lane.positions, x);
      if (std::isfinite(d)) pooled.push_back(d);
    }
  }
  return {StatKind::F, grid, ecdf_on_grid(std::move(pooled), grid)};
}

SummaryCurve empirical_j(const SummaryCurve& g, const SummaryCurve& f) {
  if (g.r != f.r) {
    throw std::invalid_argument("empirical_j: curves on different grids");
  }
  SummaryCurve j{StatKind::J, g.r, {}};
  j.value.resize(g.r.size(), kNaN);
  for (std::size_t i = 0; i < g.r.size(); ++i) {
    const double denom = 1.0 - f.value[i];
    if (denom < 1e-6 || std::isnan(g.value[i]) || std::isnan(f.value[i])) {
      continue;
    }
    j.value[i] = (1.0 - g.value[i]) / denom;
  }
  return j;
}

double pooled_intensity(const std::vector<LaneSnapshot>& lanes) {
  double gap_sum = 0.0;
  std::size_t gap_count = 0;
  for (const auto& lane : lanes) {
    const auto& p = lane.positions;
    for (std::size_t i = 1; i < p.size(); ++i) gap_sum += p[i] - p[i - 1];
    if (p.size() > 1) gap_count += p.size() - 1;
  }
  if (gap_count == 0 || !(gap_sum > 0.0)) {
    throw std::invalid_argument("pooled_intensity: no gaps in snapshots");
  }
  return static_cast<double>(gap_count) / gap_sum;
}

SummaryCurve empirical_l(const std::vector<LaneSnapshot>& lanes, double margin,
                         const std::vector<double>& grid) {
  check_grid(grid);
  const double lambda_hat = pooled_intensity(lanes);
  std::vector<double> count_sum(grid.size(), 0.0);
  std::size_t centers = 0;
  for (const auto& lane : lanes) {
    const Window in =
        inner_window({lane.extent_begin, lane.extent_end}, margin);
    const auto& p = lane.positions;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < in.begin || p[i] > in.end) continue;
      ++centers;
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto lo =
            std::lower_bound(p.begin(), p.end(), p[i] - grid[k]);
        const auto hi =
            std::upper_bound(p.begin(), p.end(), p[i] + grid[k]);
        count_sum[k] += static_cast<double>(hi - lo) - 1.0;
      }
    }
  }
  SummaryCurve l{StatKind::L, grid, {}};
  l.value.resize(grid.size(), kNaN);
  if (centers == 0) return l;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    l.value[k] =
        count_sum[k] / static_cast<double>(centers) / (2.0 * lambda_hat);
  }
  return l;
}

Envelope envelope(const std::vector<SummaryCurve>& curves) {
  if (curves.empty()) throw std::invalid_argument("envelope: no curves");
  const auto& grid = curves.front().r;
  for (const auto& c : curves) {
    if (c.r != grid) {
      throw std::invalid_argument("envelope: curves on different grids");
    }
  }
  Envelope env;
  env.r = grid;
  env.lo.assign(grid.size(), kNaN);
  env.hi.assign(grid.size(), kNaN);
  env.mean.assign(grid.size(), kNaN);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& c : curves) {
      const double v = c.value[i];
      if (std::isnan(v)) continue;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      sum += v;
      ++n;
    }
    if (n == 0) continue;
    env.lo[i] = lo;
    env.hi[i] = hi;
    env.mean[i] = sum / static_cast<double>(n);
  }
  return env;
}

namespace {

double interp(const SummaryCurve& c, double x) {
  const auto it = std::lower_bound(c.r.begin(), c.r.end(), x);
  if (it == c.r.begin()) return c.value.front();
  if (it == c.r.end()) return c.value.back();
  const std::size_t hi = static_cast<std::size_t>(it - c.r.begin());
  const std::size_t lo = hi - 1;
  const double span = c.r[hi] - c.r[lo];
  if (!(span > 0.0)) return c.value[hi];
  const double t = (x - c.r[lo]) / span;
  return c.value[lo] + t * (c.value[hi] - c.value[lo]);
}

}  // namespace

double ks_distance(const SummaryCurve& a, const SummaryCurve& b) {
  if (a.r.empty() || b.r.empty()) {
    throw std::invalid_argument("ks_distance: empty curve");
  }
  const double lo = std::max(a.r.front(), b.r.front());
  const double hi = std::min(a.r.back(), b.r.back());
  if (!(hi >= lo)) {
    throw std::invalid_argument("ks_distance: curves do not overlap");
  }
  std::vector<double> merged;
  merged.reserve(a.r.size() + b.r.size());
  for (double x : a.r)
    if (x >= lo && x <= hi) merged.push_back(x);
  for (double x : b.r)
    if (x >= lo && x <= hi) merged.push_back(x);
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  double sup = 0.0;
  bool any = false;
  for (double x : merged) {
    const double va = interp(a, x);
    const double vb = interp(b, x);
    if (std::isnan(va) || std::isnan(vb)) continue;
    sup = std::max(sup, std::abs(va - vb));
    any = true;
  }
  if (!any) throw std::invalid_argument("ks_distance: no comparable samples");
  return sup;
}

}  // namespace hcvanet
