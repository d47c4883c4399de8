#include "hcvanet/sampling.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hcvanet {

double equilibrium_gap_quantile(const HardcoreLaneModel& model, double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::invalid_argument("equilibrium_gap_quantile: u outside [0, 1]");
  }
  const double lambda = model.lambda();
  const double c = model.hardcore();
  const double mu = model.mu();
  // CDF is lambda * x on [0, c] (mass lambda * c), then
  // lambda*c + (lambda/mu) * (1 - exp(-mu (x - c))) beyond.
  const double knee = lambda * c;
  if (u <= knee) {
    return u / lambda;
  }
  const double tail = 1.0 - (u - knee) * mu / lambda;
  if (tail <= 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return c - std::log(tail) / mu;
}

double sample_equilibrium_gap(const HardcoreLaneModel& model, Rng& rng) {
  // uniform() is on (0, 1], so 1-u covers [0, 1) and the tail log stays finite.
  return equilibrium_gap_quantile(model, 1.0 - rng.uniform());
}

double sample_gap(const HardcoreLaneModel& model, Rng& rng) {
  return model.hardcore() + rng.exponential(model.mu());
}

LaneSnapshot sample_lane(const HardcoreLaneModel& model, double begin,
                         double end, Rng& rng) {
  if (!(end > begin)) {
    throw std::invalid_argument("sample_lane: empty extent");
  }
  LaneSnapshot lane;
  lane.extent_begin = begin;
  lane.extent_end = end;
  double x = begin + sample_equilibrium_gap(model, rng);
  while (x < end) {
    lane.positions.push_back(x);
    x += sample_gap(model, rng);
  }
  return lane;
}

LaneSnapshot sample_lane_palm(const HardcoreLaneModel& model, double anchor,
                              double begin, double end, Rng& rng) {
  if (!(end > begin)) {
    throw std::invalid_argument("sample_lane_palm: empty extent");
  }
  LaneSnapshot lane;
  lane.extent_begin = begin;
  lane.extent_end = end;
  std::vector<double> below;
  double x = anchor;
  while (true) {
    x -= sample_gap(model, rng);
    if (x < begin) break;
    below.push_back(x);
  }
  lane.positions.assign(below.rbegin(), below.rend());
  x = anchor;
  while (x < end) {
    if (x >= begin) lane.positions.push_back(x);
    x += sample_gap(model, rng);
  }
  return lane;
}

LaneSnapshot sample_ppp_lane(double lambda, double begin, double end,
                             Rng& rng) {
  if (!(end > begin)) {
    throw std::invalid_argument("sample_ppp_lane: empty extent");
  }
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("sample_ppp_lane: intensity must be positive");
  }
  LaneSnapshot lane;
  lane.extent_begin = begin;
  lane.extent_end = end;
  // Memoryless gaps make the renewal construction exact and keep every draw
  // on the explicit uniform/exponential transforms.
  double x = begin + rng.exponential(lambda);
  while (x < end) {
    lane.positions.push_back(x);
    x += rng.exponential(lambda);
  }
  return lane;
}

}  // namespace hcvanet
