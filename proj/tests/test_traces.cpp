#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "hcvanet/model.hpp"
#include "hcvanet/rng.hpp"
#include "hcvanet/traces.hpp"

using hcvanet::EmpiricalCdf;
using hcvanet::HardcoreLaneModel;
using hcvanet::RngSeed;
using hcvanet::TraceFile;

namespace {

std::string temp_path(const char* name) {
  return std::string("/tmp/hcvanet_test_") + name;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  out << body;
}

}  // namespace

TEST_SUITE("traces") {

TEST_CASE("parse failures carry the offending location") {
  const auto missing = temp_path("missing.csv");
  std::remove(missing.c_str());
  CHECK_THROWS_AS(hcvanet::parse_trace(missing), std::invalid_argument);

  const auto empty = temp_path("empty.csv");
  write_file(empty, "");
  CHECK_THROWS_AS(hcvanet::parse_trace(empty), std::invalid_argument);

  const auto bad_header = temp_path("badheader.csv");
  write_file(bad_header, "snap,lane,pos\n0,0,1.0\n");
  CHECK_THROWS_AS(hcvanet::parse_trace(bad_header), std::invalid_argument);

  const auto bad_row = temp_path("badrow.csv");
  write_file(bad_row, "snapshot_id,lane_id,position_m\n0,0,oops\n");
  try {
    hcvanet::parse_trace(bad_row);
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
}

TEST_CASE("a single row yields a one-point snapshot") {
  const auto path = temp_path("single.csv");
  write_file(path, "snapshot_id,lane_id,position_m\n3,1,250.5\n");
  const TraceFile t = hcvanet::parse_trace(path);
  REQUIRE(t.snapshots.size() == 1);
  CHECK(t.snapshots[0].snapshot_id == 3);
  CHECK(t.snapshots[0].lane_id == 1);
  REQUIRE(t.snapshots[0].positions.size() == 1);
  CHECK(t.snapshots[0].positions[0] == 250.5);
  CHECK(t.meta.extent_m == doctest::Approx(250.5));
}

TEST_CASE("duplicate rows collapse with a warning") {
  const auto path = temp_path("dups.csv");
  write_file(path,
             "snapshot_id,lane_id,position_m\n0,0,10\n0,0,10\n0,0,40\n");
  const TraceFile t = hcvanet::parse_trace(path);
  REQUIRE(t.snapshots.size() == 1);
  CHECK(t.snapshots[0].positions == std::vector<double>{10.0, 40.0});
  REQUIRE_FALSE(t.warnings.empty());
  CHECK(t.warnings[0].find("1 duplicate") != std::string::npos);
}

TEST_CASE("warm-up snapshots can be dropped at ingestion") {
  const auto path = temp_path("drop.csv");
  std::string body = "snapshot_id,lane_id,position_m\n";
  for (int s = 0; s < 10; ++s) {
    body += std::to_string(s) + ",0,10\n" + std::to_string(s) + ",0,50\n";
  }
  write_file(path, body);
  const TraceFile t = hcvanet::parse_trace(path, 4);
  const auto ids = t.snapshot_ids();
  REQUIRE(ids.size() == 6);
  CHECK(ids.front() == 4);
  CHECK(ids.back() == 9);
  CHECK_THROWS_AS(hcvanet::parse_trace(path, 10), std::invalid_argument);
}

TEST_CASE("synthetic traces round-trip through the file format") {
  const std::vector<HardcoreLaneModel> models{
      HardcoreLaneModel::from_intensity(0.0248, 7.10),
      HardcoreLaneModel::from_intensity(0.0218, 11.05),
      HardcoreLaneModel::from_intensity(0.0205, 14.82)};
  const TraceFile t = hcvanet::generate_synthetic_trace(
      models, 25, 3000.0, RngSeed{17, 0}, "roundtrip");
  CHECK(t.lane_ids() == std::vector<int>{0, 1, 2});
  CHECK(t.meta.ground_truth.size() == 3);
  CHECK(t.meta.ground_truth[1].lambda == 0.0218);
  CHECK(t.meta.ground_truth[1].c == 11.05);

  const auto path = temp_path("roundtrip.csv");
  hcvanet::write_trace(t, path);
  const TraceFile back = hcvanet::parse_trace(path);
  REQUIRE(back.snapshots.size() == t.snapshots.size());
  for (std::size_t i = 0; i < t.snapshots.size(); ++i) {
    CHECK(back.snapshots[i].snapshot_id == t.snapshots[i].snapshot_id);
    CHECK(back.snapshots[i].lane_id == t.snapshots[i].lane_id);
    CHECK(back.snapshots[i].positions == t.snapshots[i].positions);
  }
  CHECK(back.meta.name == "roundtrip");
  CHECK(back.meta.extent_m == 3000.0);
  CHECK(back.meta.ground_truth.size() == 3);
}

TEST_CASE("synthetic generation is deterministic in the seed") {
  const std::vector<HardcoreLaneModel> models{
      HardcoreLaneModel::from_intensity(0.025, 16.0)};
  const TraceFile a =
      hcvanet::generate_synthetic_trace(models, 5, 2000.0, RngSeed{9, 9});
  const TraceFile b =
      hcvanet::generate_synthetic_trace(models, 5, 2000.0, RngSeed{9, 9});
  const TraceFile c =
      hcvanet::generate_synthetic_trace(models, 5, 2000.0, RngSeed{9, 10});
  REQUIRE(a.snapshots.size() == b.snapshots.size());
  bool all_equal = true, any_diff = false;
  for (std::size_t i = 0; i < a.snapshots.size(); ++i) {
    all_equal = all_equal && a.snapshots[i].positions == b.snapshots[i].positions;
    any_diff = any_diff || a.snapshots[i].positions != c.snapshots[i].positions;
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("generated hardcore gaps respect the exclusion floor") {
  const std::vector<HardcoreLaneModel> models{
      HardcoreLaneModel::from_intensity(0.025, 16.0)};
  const TraceFile t =
      hcvanet::generate_synthetic_trace(models, 10, 5000.0, RngSeed{13, 0});
  for (const auto& snap : t.snapshots) {
    for (std::size_t i = 1; i < snap.positions.size(); ++i) {
      CHECK(snap.positions[i] - snap.positions[i - 1] >= 16.0 - 1e-6);
    }
  }
}

TEST_CASE("gap extraction windows and failure modes") {
  hcvanet::LaneSnapshot lane;
  lane.positions = {0.0, 40.0, 100.0};
  lane.extent_begin = 0.0;
  lane.extent_end = 120.0;
  const auto gaps = hcvanet::extract_gaps(lane, hcvanet::Window{0.0, 120.0});
  CHECK(gaps == std::vector<double>{40.0, 60.0});
  // A margin dropping the edge points leaves fewer than two positions.
  CHECK_THROWS_AS(hcvanet::extract_gaps(lane, hcvanet::Window{30.0, 90.0}),
                  std::invalid_argument);
  const auto trimmed =
      hcvanet::extract_gaps(lane, hcvanet::Window{20.0, 120.0});
  CHECK(trimmed == std::vector<double>{60.0});
}

TEST_CASE("empirical CDF interpolates between support points") {
  const EmpiricalCdf cdf(std::vector<double>{10.0, 20.0});
  CHECK(cdf.inverse_sample(0.0) == 10.0);
  CHECK(cdf.inverse_sample(0.5) == doctest::Approx(15.0).epsilon(1e-14));
  CHECK(cdf.inverse_sample(1.0) == 20.0);
  CHECK(cdf.min() == 10.0);
  CHECK(cdf.max() == 20.0);
  CHECK(cdf.mean() == doctest::Approx(15.0));
  CHECK_THROWS_AS(cdf.inverse_sample(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(cdf.inverse_sample(1.01), std::invalid_argument);
}

TEST_CASE("resampling the empirical CDF reproduces the sample law") {
  const auto m = HardcoreLaneModel::from_intensity(0.025, 16.0);
  hcvanet::Rng rng(RngSeed{19, 0});
  std::vector<double> sample(20000);
  for (auto& g : sample) g = 16.0 + rng.exponential(m.mu());
  const EmpiricalCdf cdf(sample);

  const std::size_t draws = 1000000;
  std::vector<double> resampled(draws);
  hcvanet::Rng rng2(RngSeed{19, 1});
  double sum = 0.0;
  for (auto& g : resampled) {
    g = cdf.inverse_sample(rng2.uniform());
    sum += g;
  }
  CHECK(sum / static_cast<double>(draws) ==
        doctest::Approx(cdf.mean()).epsilon(0.01));

  std::sort(resampled.begin(), resampled.end());
  double ks = 0.0;
  for (std::size_t i = 0; i < draws; i += 997) {
    const double x = resampled[i];
    const double emp = static_cast<double>(i) / draws;
    ks = std::max(ks, std::abs(emp - cdf.cdf(x)));
  }
  CHECK(ks <= 0.01);
}

TEST_CASE("pooled gaps concatenate per-snapshot extractions") {
  const std::vector<HardcoreLaneModel> models{
      HardcoreLaneModel::from_intensity(0.02, 10.0)};
  const TraceFile t =
      hcvanet::generate_synthetic_trace(models, 4, 3000.0, RngSeed{23, 0});
  const auto pooled = hcvanet::pooled_gaps(t, 0);
  std::size_t count = 0;
  for (const auto& snap : t.snapshots) count += snap.positions.size() - 1;
  CHECK(pooled.size() == count);
  CHECK(*std::min_element(pooled.begin(), pooled.end()) >= 10.0 - 1e-6);
}

}  // TEST_SUITE
