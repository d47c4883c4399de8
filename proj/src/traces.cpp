#include "hcvanet/traces.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hcvanet {

namespace {

std::string sidecar_path(const std::string& path) {
  const auto dot = path.rfind(".csv");
  const std::string base =
      (dot != std::string::npos && dot == path.size() - 4)
          ? path.substr(0, dot)
          : path;
  return base + ".meta.json";
}

[[noreturn]] void parse_fail(const std::string& path, std::size_t line,
                             const std::string& what) {
  std::ostringstream os;
  os << path << ":" << line << ": " << what;
  throw std::invalid_argument(os.str());
}

double parse_double_field(const std::string& path, std::size_t line,
                          const char* begin, const char* end) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    parse_fail(path, line, "malformed numeric field");
  }
  return v;
}

std::int64_t parse_int_field(const std::string& path, std::size_t line,
                             const char* begin, const char* end) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    parse_fail(path, line, "malformed integer field");
  }
  return v;
}

}  // namespace

std::vector<int> TraceFile::lane_ids() const {
  std::set<int> ids;
  for (const auto& s : snapshots) ids.insert(s.lane_id);
  return {ids.begin(), ids.end()};
}

std::vector<std::int64_t> TraceFile::snapshot_ids() const {
  std::set<std::int64_t> ids;
  for (const auto& s : snapshots) ids.insert(s.snapshot_id);
  return {ids.begin(), ids.end()};
}

const LaneSnapshot* TraceFile::find(std::int64_t snapshot_id,
                                    int lane_id) const {
  for (const auto& s : snapshots) {
    if (s.snapshot_id == snapshot_id && s.lane_id == lane_id) return &s;
  }
  return nullptr;
}

std::vector<const LaneSnapshot*> TraceFile::lane_snapshots(int lane_id) const {
  std::vector<const LaneSnapshot*> out;
  for (const auto& s : snapshots) {
    if (s.lane_id == lane_id) out.push_back(&s);
  }
  return out;
}

TraceFile parse_trace(const std::string& path, std::size_t drop_first) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open trace file: " + path);

  TraceFile trace;
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) parse_fail(path, 1, "empty file");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "snapshot_id,lane_id,position_m") {
    parse_fail(path, 1, "expected header snapshot_id,lane_id,position_m");
  }

  std::map<std::pair<std::int64_t, int>, std::vector<double>> groups;
  double max_pos = 0.0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        line.find(',', c2 + 1) != std::string::npos) {
      parse_fail(path, line_no, "expected 3 comma-separated fields");
    }
    const char* s = line.data();
    const std::int64_t snap = parse_int_field(path, line_no, s, s + c1);
    const std::int64_t lane =
        parse_int_field(path, line_no, s + c1 + 1, s + c2);
    const double pos =
        parse_double_field(path, line_no, s + c2 + 1, s + line.size());
    if (!(pos >= 0.0) || !std::isfinite(pos)) {
      parse_fail(path, line_no, "position must be finite and >= 0");
    }
    groups[{snap, static_cast<int>(lane)}].push_back(pos);
    max_pos = std::max(max_pos, pos);
  }
  if (groups.empty()) parse_fail(path, line_no, "no data rows");

  // Sidecar is optional; without it the extent falls back to the data span.
  trace.meta.extent_m = max_pos;
  std::ifstream meta_in(sidecar_path(path));
  if (meta_in) {
    nlohmann::json j;
    meta_in >> j;
    trace.meta.name = j.value("name", std::string{});
    trace.meta.granularity_s = j.value("granularity_s", 1.0);
    trace.meta.extent_m = j.value("extent_m", max_pos);
    if (j.contains("ground_truth")) {
      for (const auto& g : j["ground_truth"]) {
        trace.meta.ground_truth.push_back({g.at("lane_id").get<int>(),
                                           g.at("lambda").get<double>(),
                                           g.at("c").get<double>()});
      }
    }
  }
  if (trace.meta.extent_m < max_pos) {
    parse_fail(path, 1, "metadata extent smaller than max position");
  }

  std::set<std::int64_t> kept_ids;
  {
    std::set<std::int64_t> all_ids;
    for (const auto& [key, _] : groups) all_ids.insert(key.first);
    std::size_t skip = drop_first;
    for (std::int64_t id : all_ids) {
      if (skip > 0) {
        --skip;
        continue;
      }
      kept_ids.insert(id);
    }
    if (kept_ids.empty()) {
      parse_fail(path, 1, "drop_first discards every snapshot");
    }
  }

  std::size_t duplicates = 0;
  for (auto& [key, positions] : groups) {
    if (!kept_ids.count(key.first)) continue;
    std::sort(positions.begin(), positions.end());
    const auto last = std::unique(positions.begin(), positions.end());
    duplicates += static_cast<std::size_t>(positions.end() - last);
    positions.erase(last, positions.end());
    LaneSnapshot snap;
    snap.snapshot_id = key.first;
    snap.lane_id = key.second;
    snap.extent_begin = 0.0;
    snap.extent_end = trace.meta.extent_m;
    snap.positions = std::move(positions);
    trace.snapshots.push_back(std::move(snap));
  }
  if (duplicates > 0) {
    std::ostringstream os;
    os << "collapsed " << duplicates << " duplicate position rows";
    trace.warnings.push_back(os.str());
  }
  {
    auto ids = trace.lane_ids();
    trace.meta.lane_ids = std::move(ids);
  }
  return trace;
}

void write_trace(const TraceFile& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write trace file: " + path);
  out << "snapshot_id,lane_id,position_m\n";
  char buf[96];
  for (const auto& s : trace.snapshots) {
    for (double p : s.positions) {
      const int n = std::snprintf(buf, sizeof buf, "%lld,%d,%.6f\n",
                                  static_cast<long long>(s.snapshot_id),
                                  s.lane_id, p);
      out.write(buf, n);
    }
  }
  if (!out) throw std::invalid_argument("write failed: " + path);

  nlohmann::json j;
  j["name"] = trace.meta.name;
  j["granularity_s"] = trace.meta.granularity_s;
  j["extent_m"] = trace.meta.extent_m;
  j["lanes"] = trace.meta.lane_ids;
  if (!trace.meta.ground_truth.empty()) {
    nlohmann::json gt = nlohmann::json::array();
    for (const auto& g : trace.meta.ground_truth) {
      gt.push_back({{"lane_id", g.lane_id}, {"lambda", g.lambda}, {"c", g.c}});
    }
    j["ground_truth"] = gt;
  }
  std::ofstream meta_out(sidecar_path(path), std::ios::binary);
  if (!meta_out) {
    throw std::invalid_argument("cannot write sidecar: " + sidecar_path(path));
  }
  meta_out << j.dump(2) << "\n";
}

TraceFile generate_synthetic_trace(const std::vector<HardcoreLaneModel>& models,
                                   std::size_t n_snapshots, double extent_m,
                                   RngSeed seed, const std::string& name) {
  if (models.empty()) {
    throw std::invalid_argument("generate_synthetic_trace: no lane models");
  }
  if (n_snapshots == 0 || !(extent_m > 0.0)) {
    throw std::invalid_argument(
        "generate_synthetic_trace: need snapshots and a positive extent");
  }
  TraceFile trace;
  trace.meta.name = name;
  trace.meta.granularity_s = 1.0;
  trace.meta.extent_m = extent_m;
  char buf[48];
  for (std::size_t snap = 0; snap < n_snapshots; ++snap) {
    for (std::size_t lane = 0; lane < models.size(); ++lane) {
      Rng rng(seed.substream(snap * models.size() + lane));
      LaneSnapshot s = sample_lane(models[lane], 0.0, extent_m, rng);
      s.snapshot_id = static_cast<std::int64_t>(snap);
      s.lane_id = static_cast<int>(lane);
      // Snap to the 6-decimal file precision so write -> parse is identity.
      for (double& p : s.positions) {
        std::snprintf(buf, sizeof buf, "%.6f", p);
        p = std::strtod(buf, nullptr);
      }
      s.positions.erase(std::unique(s.positions.begin(), s.positions.end()),
                        s.positions.end());
      trace.snapshots.push_back(std::move(s));
    }
  }
  for (std::size_t lane = 0; lane < models.size(); ++lane) {
    trace.meta.lane_ids.push_back(static_cast<int>(lane));
    trace.meta.ground_truth.push_back({static_cast<int>(lane),
                                       models[lane].lambda(),
                                       models[lane].hardcore()});
  }
  return trace;
}

std::vector<double> extract_gaps(const LaneSnapshot& lane,
                                 const Window& window) {
  std::vector<double> inside;
  for (double p : lane.positions) {
    if (p >= window.begin && p <= window.end) inside.push_back(p);
  }
  if (inside.size() < 2) {
    throw std::invalid_argument("extract_gaps: fewer than 2 vehicles in window");
  }
  std::vector<double> gaps;
  gaps.reserve(inside.size() - 1);
  for (std::size_t i = 1; i < inside.size(); ++i) {
    gaps.push_back(inside[i] - inside[i - 1]);
  }
  return gaps;
}

std::vector<double> pooled_gaps(const TraceFile& trace, int lane_id) {
  std::vector<double> gaps;
  for (const auto* s : trace.lane_snapshots(lane_id)) {
    if (s->positions.size() < 2) continue;
    for (std::size_t i = 1; i < s->positions.size(); ++i) {
      gaps.push_back(s->positions[i] - s->positions[i - 1]);
    }
  }
  if (gaps.size() < 2) {
    throw std::invalid_argument("pooled_gaps: fewer than 2 gaps in lane");
  }
  return gaps;
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> sample)
    : support_(std::move(sample)) {
  if (support_.empty()) {
    throw std::invalid_argument("EmpiricalCdf: empty sample");
  }
  std::sort(support_.begin(), support_.end());
  double s = 0.0;
  for (double x : support_) s += x;
  mean_ = s / static_cast<double>(support_.size());
}

double EmpiricalCdf::inverse_sample(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::invalid_argument("EmpiricalCdf::inverse_sample: u outside [0,1]");
  }
  if (support_.size() == 1) return support_.front();
  const double pos = u * static_cast<double>(support_.size() - 1);
  const std::size_t lo = std::min(static_cast<std::size_t>(pos),
                                  support_.size() - 2);
  const double t = pos - static_cast<double>(lo);
  return support_[lo] + t * (support_[lo + 1] - support_[lo]);
}

double EmpiricalCdf::cdf(double x) const {
  if (x < support_.front()) return 0.0;
  if (x >= support_.back()) return 1.0;
  const auto it = std::upper_bound(support_.begin(), support_.end(), x);
  const std::size_t hi = static_cast<std::size_t>(it - support_.begin());
  const std::size_t lo = hi - 1;
  const double span = support_[hi] - support_[lo];
  const double t = span > 0.0 ? (x - support_[lo]) / span : 1.0;
  return (static_cast<double>(lo) + t) /
         static_cast<double>(support_.size() - 1);
}

}  // namespace hcvanet
