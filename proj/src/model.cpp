#include "hcvanet/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hcvanet/special.hpp"

namespace hcvanet {

std::string stat_kind_name(StatKind kind) {
  switch (kind) {
    case StatKind::PCF: return "pcf";
    case StatKind::J: return "J";
    case StatKind::K: return "K";
    case StatKind::L: return "L";
    case StatKind::G: return "G";
    case StatKind::F: return "F";
  }
  return "?";
}

namespace {
constexpr double kMaxLambdaC = 1.0 - 1e-9;

void check(double lambda, double mu, double c) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("HardcoreLaneModel: intensity must be positive and finite");
  if (!(mu > 0.0) || !std::isfinite(mu))
    throw std::invalid_argument("HardcoreLaneModel: gap rate must be positive and finite");
  if (c < 0.0 || !std::isfinite(c))
    throw std::invalid_argument("HardcoreLaneModel: hardcore distance must be >= 0 and finite");
  if (lambda * c > kMaxLambdaC)
    throw std::invalid_argument("HardcoreLaneModel: lambda * c must stay below 1");
}
}  // namespace

HardcoreLaneModel HardcoreLaneModel::from_intensity(double lambda, double c) {
  if (!(lambda > 0.0) || !std::isfinite(lambda) || !std::isfinite(c) || c < 0.0)
    check(lambda, 1.0, c);
  if (lambda * c > kMaxLambdaC)
    throw std::invalid_argument("HardcoreLaneModel: lambda * c must stay below 1");
  const double mu = lambda / (1.0 - lambda * c);
  check(lambda, mu, c);
  return {lambda, mu, c};
}

HardcoreLaneModel HardcoreLaneModel::from_rate(double mu, double c) {
  if (!(mu > 0.0) || !std::isfinite(mu) || !std::isfinite(c) || c < 0.0)
    check(1.0, mu, c);
  const double lambda = mu / (1.0 + mu * c);
  check(lambda, mu, c);
  return {lambda, mu, c};
}

double HardcoreLaneModel::pcf(double separation) const {
  const double s = std::fabs(separation);
  if (c_ == 0.0) return s > 0.0 ? lambda_ * lambda_ : 0.0;
  if (s <= c_) return 0.0;
  // j-th term is the Erlang(j, mu) density at s - j c: the j-th renewal epoch.
  const int jmax = static_cast<int>(std::ceil(s / c_)) - 1;
  double sum = 0.0;
  for (int j = 1; j <= jmax; ++j) {
    const double x = s - j * c_;
    if (x <= 0.0) continue;
    const double logterm =
        j * std::log(mu_) + (j - 1) * std::log(x) - std::lgamma(j) - mu_ * x;
    sum += std::exp(logterm);
  }
  return lambda_ * sum;
}

double HardcoreLaneModel::pcf_normalized(double separation) const {
  return pcf(separation) / (lambda_ * mu_);
}

double HardcoreLaneModel::third_order(double x, double y, double z) const {
  double a[3] = {x, y, z};
  std::sort(a, a + 3);  // a[0] <= a[1] <= a[2]
  return pcf(a[2] - a[1]) * pcf(a[1] - a[0]) / lambda_;
}

double HardcoreLaneModel::j_function(double r) const {
  if (r < 0.0) throw std::invalid_argument("j_function: r must be >= 0");
  if (c_ == 0.0) return 1.0;
  if (r <= 0.5 * c_) return 1.0 / (1.0 - 2.0 * lambda_ * r);
  const double scale = 1.0 / (1.0 - lambda_ * c_);
  if (r <= c_) return scale * std::exp(mu_ * (2.0 * r - c_));
  return scale * std::exp(mu_ * c_);
}

double HardcoreLaneModel::k_function(double r) const {
  if (r < 0.0) throw std::invalid_argument("k_function: r must be >= 0");
  if (c_ == 0.0) return 2.0 * r;
  const int n = static_cast<int>(std::floor(r / c_));
  double sum = 0.0;
  for (int k = 1; k <= n; ++k)
    sum += 1.0 - gamma_q_int(k, mu_ * (r - k * c_));
  return 2.0 / lambda_ * sum;
}

double HardcoreLaneModel::l_function(double r) const { return 0.5 * k_function(r); }

double HardcoreLaneModel::nn_cdf(double r) const {
  if (r <= c_) return 0.0;
  return -std::expm1(-2.0 * mu_ * (r - c_));
}

double HardcoreLaneModel::contact_cdf(double r) const {
  if (r <= 0.0) return 0.0;
  if (r <= 0.5 * c_) return 2.0 * lambda_ * r;
  return 1.0 - (1.0 - lambda_ * c_) * std::exp(-mu_ * (2.0 * r - c_));
}

SummaryCurve HardcoreLaneModel::curve(StatKind kind,
                                      const std::vector<double>& r_grid) const {
  SummaryCurve out;
  out.kind = kind;
  out.r = r_grid;
  out.value.reserve(r_grid.size());
  for (double r : r_grid) {
    double v = 0.0;
    switch (kind) {
      case StatKind::PCF: v = pcf(r); break;
      case StatKind::J: v = j_function(r); break;
      case StatKind::K: v = k_function(r); break;
      case StatKind::L: v = l_function(r); break;
      case StatKind::G: v = nn_cdf(r); break;
      case StatKind::F: v = contact_cdf(r); break;
    }
    out.value.push_back(v);
  }
  return out;
}

std::vector<double> uniform_grid(double r_max, double step) {
  if (!(step > 0.0) || !(r_max >= 0.0))
    throw std::invalid_argument("uniform_grid: needs step > 0 and r_max >= 0");
  std::vector<double> grid;
  const int n = static_cast<int>(std::floor(r_max / step + 1e-9));
  grid.reserve(n + 1);
  for (int i = 0; i <= n; ++i) grid.push_back(i * step);
  return grid;
}

}  // namespace hcvanet
