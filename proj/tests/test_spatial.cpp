#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hcvanet/model.hpp"
#include "hcvanet/rng.hpp"
#include "hcvanet/sampling.hpp"
#include "hcvanet/spatial.hpp"

using hcvanet::LaneSnapshot;
using hcvanet::Rng;
using hcvanet::RngSeed;
using hcvanet::StatKind;
using hcvanet::SummaryCurve;
using hcvanet::Window;

namespace {

LaneSnapshot make_lane(std::vector<double> positions, double begin, double end) {
  LaneSnapshot lane;
  lane.snapshot_id = 0;
  lane.lane_id = 0;
  lane.extent_begin = begin;
  lane.extent_end = end;
  lane.positions = std::move(positions);
  return lane;
}

}  // namespace

TEST_SUITE("spatial") {

TEST_CASE("inner window arithmetic and failure modes") {
  const Window w{0.0, 100.0};
  const Window in = hcvanet::inner_window(w, 10.0);
  CHECK(in.begin == 10.0);
  CHECK(in.end == 90.0);
  CHECK(in.length() == 80.0);
  CHECK_THROWS_AS(hcvanet::inner_window(w, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(hcvanet::inner_window(w, 50.0), std::invalid_argument);
}

TEST_CASE("nearest-neighbor distances use points outside the inner window") {
  const auto lane = make_lane({0.0, 10.0, 25.0, 100.0}, 0.0, 100.0);
  const auto d = hcvanet::nn_distances(lane, Window{5.0, 95.0});
  REQUIRE(d.size() == 2);  // 10 and 25 lie inside; 0 and 100 only serve as neighbors
  CHECK(d[0] == 10.0);
  CHECK(d[1] == 15.0);
}

TEST_CASE("nearest-neighbor CDF on a deterministic configuration") {
  const auto lane = make_lane({0.0, 50.0, 100.0}, 0.0, 100.0);
  const auto g =
      hcvanet::empirical_nn_cdf({lane}, 10.0, std::vector<double>{49.0, 51.0});
  CHECK(g.kind == StatKind::G);
  CHECK(g.value[0] == 0.0);  // the single inner point sits 50 from both ends
  CHECK(g.value[1] == 1.0);
}

TEST_CASE("contact CDF against the exact law for one point") {
  // Single point at 50, probes uniform on [10, 90]:
  // P(dist <= r) = 2 r / 80 for r <= 40.
  const auto lane = make_lane({50.0}, 0.0, 100.0);
  const std::vector<double> grid{5.0, 10.0, 20.0, 40.0};
  Rng rng(RngSeed{3, 14});
  const auto f = hcvanet::empirical_contact_cdf({lane}, 10.0, grid, 20000, rng);
  CHECK(f.kind == StatKind::F);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double want = std::min(2.0 * grid[i] / 80.0, 1.0);
    CHECK(f.value[i] == doctest::Approx(want).epsilon(0.05));
  }
}

TEST_CASE("J ratio flags an exhausted denominator") {
  SummaryCurve g;
  g.kind = StatKind::G;
  g.r = {1.0, 2.0};
  g.value = {0.2, 0.4};
  SummaryCurve f = g;
  f.kind = StatKind::F;
  f.value = {0.5, 1.0};
  const auto j = hcvanet::empirical_j(g, f);
  CHECK(j.kind == StatKind::J);
  CHECK(j.value[0] == doctest::Approx(0.8 / 0.5).epsilon(1e-12));
  CHECK(std::isnan(j.value[1]));

  SummaryCurve off = f;
  off.r = {1.0, 3.0};
  CHECK_THROWS_AS(hcvanet::empirical_j(g, off), std::invalid_argument);
}

TEST_CASE("pooled intensity is the reciprocal mean gap") {
  const auto a = make_lane({0.0, 10.0, 30.0}, 0.0, 100.0);
  const auto b = make_lane({0.0, 40.0}, 0.0, 100.0);
  // Gaps 10, 20, 40: pooled intensity 3 / 70.
  CHECK(hcvanet::pooled_intensity({a, b}) ==
        doctest::Approx(3.0 / 70.0).epsilon(1e-14));
}

TEST_CASE("Ripley L on a regular lattice") {
  std::vector<double> pts;
  for (double x = 0.0; x <= 1000.0; x += 10.0) pts.push_back(x);
  const auto lane = make_lane(pts, 0.0, 1000.0);
  const auto l =
      hcvanet::empirical_l({lane}, 100.0, std::vector<double>{25.0});
  // Every inner point sees exactly 4 others within 25; intensity 1/10.
  CHECK(l.kind == StatKind::L);
  CHECK(l.value[0] == doctest::Approx(4.0 / (2.0 * 0.1)).epsilon(1e-12));
}

TEST_CASE("envelope skips missing samples and brackets the family") {
  SummaryCurve a, b;
  a.r = b.r = {1.0, 2.0, 3.0};
  a.value = {0.1, std::nan(""), 0.5};
  b.value = {0.3, 0.4, std::nan("")};
  const auto env = hcvanet::envelope({a, b});
  CHECK(env.lo[0] == 0.1);
  CHECK(env.hi[0] == 0.3);
  CHECK(env.mean[0] == doctest::Approx(0.2));
  CHECK(env.lo[1] == 0.4);
  CHECK(env.hi[1] == 0.4);
  CHECK(env.lo[2] == 0.5);
  CHECK(env.mean[2] == 0.5);
}

TEST_CASE("KS distance of curves on mismatched grids") {
  SummaryCurve a, b;
  a.r = {0.0, 1.0, 2.0};
  a.value = {0.0, 0.5, 1.0};
  b.r = {0.0, 0.5, 2.0};
  b.value = {0.1, 0.35, 1.0};
  // At r = 0: |0 - 0.1| = 0.1; linear interpolation keeps the rest smaller.
  CHECK(hcvanet::ks_distance(a, b) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(hcvanet::ks_distance(a, a) == 0.0);

  SummaryCurve far;
  far.r = {10.0, 11.0};
  far.value = {0.0, 1.0};
  CHECK_THROWS_AS(hcvanet::ks_distance(a, far), std::invalid_argument);
}

TEST_CASE("empirical statistics track the closed forms on simulated lanes") {
  const auto m = hcvanet::HardcoreLaneModel::from_intensity(0.025, 16.0);
  const RngSeed seed{99, 0};
  std::vector<LaneSnapshot> lanes;
  for (int i = 0; i < 400; ++i) {
    Rng rng(seed.substream(i));
    lanes.push_back(hcvanet::sample_lane(m, 0.0, 2000.0, rng));
  }
  const std::vector<double> grid{5.0, 20.0, 40.0};
  const auto g = hcvanet::empirical_nn_cdf(lanes, 60.0, grid);
  Rng probe(seed.substream(1000));
  const auto f = hcvanet::empirical_contact_cdf(lanes, 60.0, grid, 100, probe);
  const auto j = hcvanet::empirical_j(g, f);
  const auto l = hcvanet::empirical_l(lanes, 300.0, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(g.value[i] == doctest::Approx(m.nn_cdf(grid[i])).epsilon(0.05));
    CHECK(f.value[i] == doctest::Approx(m.contact_cdf(grid[i])).epsilon(0.05));
    CHECK(j.value[i] == doctest::Approx(m.j_function(grid[i])).epsilon(0.05));
    CHECK(l.value[i] == doctest::Approx(m.l_function(grid[i])).epsilon(0.05));
  }
}

}  // TEST_SUITE
