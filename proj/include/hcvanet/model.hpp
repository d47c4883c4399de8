#ifndef HCVANET_MODEL_HPP
#define HCVANET_MODEL_HPP

#include <string>
#include <vector>

namespace hcvanet {

enum class StatKind { PCF, J, K, L, G, F };

std::string stat_kind_name(StatKind kind);

// A summary statistic sampled on a distance grid. For empirical CDFs the grid
// is the sorted sample support and values are the cumulative fractions.
struct SummaryCurve {
  StatKind kind = StatKind::J;
  std::vector<double> r;
  std::vector<double> value;
};

/// Stationary hardcore renewal lane: successive inter-vehicle gaps are
// i.i.d. c + Exp(mu). Intensity couples to the gap law via
// 1/lambda = c + 1/mu, so lambda * c < 1 strictly. c = 0 degenerates to a
// Poisson line process with lambda = mu.
class HardcoreLaneModel {
 public:
  static HardcoreLaneModel from_intensity(double lambda, double c);
  static HardcoreLaneModel from_rate(double mu, double c);

  double lambda() const { return lambda_; }
  double mu() const { return mu_; }
  double hardcore() const { return c_; }
  double mean_gap() const { return c_ + 1.0 / mu_; }
  bool is_ppp() const { return c_ == 0.0; }

  // Pair correlation rho2(s) for separation s: 0 for s <= c, and for
  // s in (kc, (k+1)c] the sum over j <= k of lambda times the j-th shifted
  // Erlang renewal density at s. Tends to lambda^2 as s grows.
  double pcf(double separation) const;
  // rho2 / (lambda * mu); tends to 1 - lambda * c.
  double pcf_normalized(double separation) const;
  // Third-order product density: pcf(x - y) * pcf(y - z) / lambda for the
  // sorted triple x > y > z. Zero when any pair coincides or sits within c.
  double third_order(double x, double y, double z) const;

  // J function (nearest-neighbor vs empty-space comparison), piecewise:
  //   (1 - 2 lambda r)^-1            r <= c/2
  //   (1 - lambda c)^-1 e^{mu(2r-c)} c/2 < r <= c
  //   (1 - lambda c)^-1 e^{mu c}     r > c          (plateau)
  double j_function(double r) const;
  // Ripley K: (2/lambda) sum_{k=1}^{floor(r/c)} [1 - Q(k, mu(r - ck))];
  // equals (2/lambda^2) * integral of the pcf. 2r for the Poisson case.
  double k_function(double r) const;
  double l_function(double r) const;  // K/2; satisfies L(r) <= r
  // Nearest-neighbor distance CDF G(r) = 1 - e^{-2 mu (r - c)} for r >= c.
  double nn_cdf(double r) const;
  // Empty-space (contact) CDF, reconstructed from J (1 - F) = 1 - G:
  // F(r) = 2 lambda r for r <= c/2, else 1 - (1 - lambda c) e^{-mu(2r-c)}.
  double contact_cdf(double r) const;

  SummaryCurve curve(StatKind kind, const std::vector<double>& r_grid) const;

 private:
  HardcoreLaneModel(double lambda, double mu, double c)
      : lambda_(lambda), mu_(mu), c_(c) {}
  double lambda_, mu_, c_;
};

// Uniform grid helper: {0, step, 2 step, ...} up to and including r_max.
std::vector<double> uniform_grid(double r_max, double step = 1.0);

}  // namespace hcvanet

#endif
