#include "hcvanet/interference.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "hcvanet/quadrature.hpp"
#include "hcvanet/special.hpp"

namespace hcvanet {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kOutageAbsTol = 1e-8;

double csc(double x) { return 1.0 / std::sin(x); }

void clamp_unit(std::vector<double>& v) {
  for (double& x : v) x = std::min(1.0, std::max(0.0, x));
}

}  // namespace

double ShiftedGammaApprox::laplace(double s) const {
  return std::exp(-s * epsilon - k * std::log1p(s * beta));
}

MomentTriple ShiftedGammaApprox::moments() const {
  return {epsilon + k * beta, k * beta * beta, 2.0 / std::sqrt(k)};
}

ShiftedGammaApprox shifted_gamma_from_moments(const MomentTriple& m) {
  if (!std::isfinite(m.mean) || !std::isfinite(m.variance) ||
      !std::isfinite(m.skewness)) {
    throw std::invalid_argument("shifted_gamma_from_moments: non-finite input");
  }
  if (!(m.skewness > 0.0) || !(m.variance > 0.0)) {
    throw std::invalid_argument(
        "shifted_gamma_from_moments: need positive variance and skewness");
  }
  ShiftedGammaApprox a;
  a.k = 4.0 / (m.skewness * m.skewness);
  a.beta = std::sqrt(m.variance / a.k);
  a.epsilon = m.mean - a.k * a.beta;
  if (a.epsilon < 0.0) {
    a.epsilon = 0.0;
    a.beta = m.mean / a.k;
    a.clamped = true;
  }
  return a;
}

void LinkScenario::validate() const {
  if (!(eta > 1.0)) throw std::invalid_argument("scenario: eta must be > 1");
  if (!(xi > 0.0 && xi <= 1.0)) {
    throw std::invalid_argument("scenario: xi must be in (0, 1]");
  }
  if (!(g > 0.0 && g < 1.0)) {
    throw std::invalid_argument("scenario: g must be in (0, 1)");
  }
  if (!(phi > 0.0 && phi < kPi)) {
    throw std::invalid_argument("scenario: phi must be in (0, pi)");
  }
  if (theta_grid.empty()) {
    throw std::invalid_argument("scenario: empty theta grid");
  }
  double prev = 0.0;
  for (double t : theta_grid) {
    if (!(t > prev)) {
      throw std::invalid_argument(
          "scenario: theta grid must be positive increasing");
    }
    prev = t;
  }
  for (const auto& lane : other_lanes) {
    if (!(lane.ell > 0.0)) {
      throw std::invalid_argument("scenario: lane spacing must be positive");
    }
  }
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::HcAnalytic:
      return "hc_analytic";
    case Provenance::PppAnalytic:
      return "ppp_analytic";
    case Provenance::MonteCarlo:
      return "monte_carlo";
  }
  return "unknown";
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double theta) { return 10.0 * std::log10(theta); }

std::vector<double> theta_grid_db(double lo_db, double hi_db, std::size_t n) {
  if (n < 2 || !(hi_db > lo_db)) {
    throw std::invalid_argument("theta_grid_db: need n >= 2 and hi > lo");
  }
  std::vector<double> grid;
  grid.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double db =
        lo_db + (hi_db - lo_db) * static_cast<double>(i) /
                    static_cast<double>(n - 1);
    grid.push_back(db_to_linear(db));
  }
  return grid;
}

std::vector<double> default_theta_grid() { return theta_grid_db(-10.0, 20.0, 61); }

double guard_zone(double ell, double phi) {
  if (!(phi > 0.0 && phi < kPi)) {
    throw std::invalid_argument("guard_zone: phi must be in (0, pi)");
  }
  if (!(ell > 0.0)) {
    throw std::invalid_argument("guard_zone: ell must be positive");
  }
  return ell / std::tan(phi / 2.0);
}

MomentTriple palm_moments_behind(const HardcoreLaneModel& model,
                                 const LinkScenario& scenario, double d) {
  if (!(d >= model.hardcore())) {
    throw std::invalid_argument("palm_moments_behind: d below hardcore");
  }
  const double lam = model.lambda();
  const double c = model.hardcore();
  const double eta = scenario.eta;
  const double xi = scenario.xi;
  const double corr = 1.0 - lam * c * xi;
  MomentTriple m;
  m.mean = lam * xi * std::pow(c + d, 1.0 - eta) / (eta - 1.0);
  m.variance =
      2.0 * lam * xi * std::pow(c + d, 1.0 - 2.0 * eta) * corr /
      (2.0 * eta - 1.0);
  m.skewness = 6.0 * lam * xi * std::pow(c + d, 1.0 - 3.0 * eta) * corr *
               corr / (3.0 * eta - 1.0) / std::pow(m.variance, 1.5);
  return m;
}

MomentTriple palm_moments_front(const HardcoreLaneModel& model,
                                const LinkScenario& scenario) {
  const double c = model.hardcore();
  if (!(c > 0.0)) {
    throw std::invalid_argument(
        "palm_moments_front: c = 0 is singular, use the Poisson path");
  }
  const double lam = model.lambda();
  const double eta = scenario.eta;
  const double xi = scenario.xi;
  const double g = scenario.g;
  const double corr = 1.0 - lam * c * xi;
  MomentTriple m;
  m.mean = lam * xi * g * std::pow(c, 1.0 - eta) / (eta - 1.0);
  m.variance = 2.0 * lam * xi * g * std::pow(c, 1.0 - 2.0 * eta) * corr /
               (2.0 * eta - 1.0);
  m.skewness = 6.0 * lam * xi * g * std::pow(c, 1.0 - 3.0 * eta) * corr *
               corr / (3.0 * eta - 1.0) / std::pow(m.variance, 1.5);
  return m;
}

MomentTriple moments_other_lane(const HardcoreLaneModel& model,
                                const LinkScenario& scenario, double r0) {
  if (!(r0 > 0.0)) {
    throw std::invalid_argument("moments_other_lane: r0 must be positive");
  }
  const double lam = model.lambda();
  const double c = model.hardcore();
  const double eta = scenario.eta;
  const double xi = scenario.xi;
  const double g = scenario.g;
  const double lcx = lam * c * xi;
  MomentTriple m;
  m.mean = lam * xi * (1.0 + g) * std::pow(r0, 1.0 - eta) / (eta - 1.0);
  m.variance = 2.0 * lam * xi * (1.0 + g) * std::pow(r0, 1.0 - 2.0 * eta) *
               (1.0 - lcx + 0.5 * lcx * lcx) / (2.0 * eta - 1.0);
  m.skewness = 6.0 * lam * xi * std::pow(r0, 1.0 - 3.0 * eta) /
               ((3.0 * eta - 1.0) * std::sqrt(1.0 + g)) *
               (1.0 - 0.5 * lcx) /
               std::pow(2.0 * lam * xi * std::pow(r0, 1.0 - 2.0 * eta) /
                            (2.0 * eta - 1.0),
                        1.5);
  return m;
}

double guardzone_t(double r, double r0, double theta, double eta) {
  // Head piece int_0^{r0} dx / (1 + x^eta / (theta r^eta)) subtracted from
  // the full-line value (pi/eta) csc(pi/eta) theta^{1/eta} r.
  const double full =
      kPi / eta * csc(kPi / eta) * std::pow(theta, 1.0 / eta) * r;
  const double x = std::pow(r0, eta) / (theta * std::pow(r, eta));
  return full - r0 * hyp2f1_guardzone(eta, x);
}

namespace {

// Shared curve assembly: for each theta, average the product of interference
// transforms at s = theta r^eta over the link-distance density.
struct LinkAverager {
  // own-lane hardcore gap density mu e^{-mu (r - c)} on [c, inf)
  static double hc(const HardcoreLaneModel& own,
                   const std::function<double(double, double)>& lt_product,
                   double theta, double eta) {
    const double mu = own.mu();
    const double c = own.hardcore();
    const auto f = [&](double r) {
      const double s = theta * std::pow(r, eta);
      return lt_product(s, r);
    };
    // The density folds into the change of variables, so the remaining
    // integrand is the bare transform product.
    const QuadResult q = integrate_exp_tail(f, c, mu, kOutageAbsTol);
    if (!q.converged) {
      throw std::runtime_error("outage quadrature did not converge");
    }
    return q.value;
  }

  static double ppp(double lambda,
                    const std::function<double(double, double)>& lt_product,
                    double theta, double eta) {
    const auto f = [&](double r) {
      const double s = theta * std::pow(r, eta);
      return lt_product(s, r);
    };
    const QuadResult q = integrate_exp_tail(f, 0.0, lambda, kOutageAbsTol);
    if (!q.converged) {
      throw std::runtime_error("outage quadrature did not converge");
    }
    return q.value;
  }
};

// d-independent transforms for everything but the behind-transmitter chain.
struct StaticLanes {
  ShiftedGammaApprox front;
  std::vector<ShiftedGammaApprox> others;

  double laplace(double s) const {
    double p = front.laplace(s);
    for (const auto& o : others) p *= o.laplace(s);
    return p;
  }
};

StaticLanes build_static_lanes(const LinkScenario& scenario,
                               bool include_others) {
  StaticLanes st;
  st.front = shifted_gamma_from_moments(
      palm_moments_front(scenario.own_lane, scenario));
  if (include_others) {
    for (const auto& lane : scenario.other_lanes) {
      const double r0 = guard_zone(lane.ell, scenario.phi);
      st.others.push_back(shifted_gamma_from_moments(
          moments_other_lane(lane.model, scenario, r0)));
    }
  }
  return st;
}

OutageCurve hc_curve_with_others(const LinkScenario& scenario,
                                 bool include_others) {
  scenario.validate();
  const StaticLanes st = build_static_lanes(scenario, include_others);
  OutageCurve curve;
  curve.provenance = Provenance::HcAnalytic;
  curve.theta = scenario.theta_grid;
  curve.p_out.reserve(curve.theta.size());
  for (double theta : curve.theta) {
    const auto lt_product = [&](double s, double r) {
      const ShiftedGammaApprox behind = shifted_gamma_from_moments(
          palm_moments_behind(scenario.own_lane, scenario, r));
      return behind.laplace(s) * st.laplace(s);
    };
    const double success =
        LinkAverager::hc(scenario.own_lane, lt_product, theta, scenario.eta);
    curve.p_out.push_back(1.0 - success);
  }
  clamp_unit(curve.p_out);
  return curve;
}

// Per-theta slope of the own-lane Poisson exponent: the behind and front
// contributions are both linear in the link distance r.
double ppp_own_slope(const LinkScenario& scenario, double theta) {
  const double eta = scenario.eta;
  const double a =
      theta * hyp2f1_outage(eta, theta) / (eta - 1.0);
  const double b = kPi / eta * csc(kPi / eta) *
                   std::pow(scenario.g * theta, 1.0 / eta);
  return scenario.xi * (a + b);
}

OutageCurve ppp_curve_with_others(const LinkScenario& scenario,
                                  bool include_others) {
  scenario.validate();
  const double lambda = scenario.own_lane.lambda();
  std::vector<double> r0s;
  if (include_others) {
    for (const auto& lane : scenario.other_lanes) {
      r0s.push_back(guard_zone(lane.ell, scenario.phi));
    }
  }
  OutageCurve curve;
  curve.provenance = Provenance::PppAnalytic;
  curve.theta = scenario.theta_grid;
  curve.p_out.reserve(curve.theta.size());
  for (double theta : curve.theta) {
    const double slope = ppp_own_slope(scenario, theta);
    if (!include_others || scenario.other_lanes.empty()) {
      // Exponential averaging of e^{-lambda slope r} is closed-form and the
      // intensity cancels.
      curve.p_out.push_back(1.0 - 1.0 / (1.0 + slope));
      continue;
    }
    const auto lt_product = [&](double, double r) {
      double p = std::exp(-lambda * slope * r);
      for (std::size_t j = 0; j < r0s.size(); ++j) {
        const double lam_j = scenario.other_lanes[j].model.lambda();
        p *= std::exp(-lam_j * scenario.xi * (1.0 + scenario.g) *
                      guardzone_t(r, r0s[j], theta, scenario.eta));
      }
      return p;
    };
    const double success =
        LinkAverager::ppp(lambda, lt_product, theta, scenario.eta);
    curve.p_out.push_back(1.0 - success);
  }
  clamp_unit(curve.p_out);
  return curve;
}

}  // namespace

OutageCurve outage_own_lane_hc(const LinkScenario& scenario) {
  return hc_curve_with_others(scenario, false);
}

OutageCurve outage_multilane_hc(const LinkScenario& scenario) {
  return hc_curve_with_others(scenario, true);
}

OutageCurve outage_own_lane_ppp(const LinkScenario& scenario) {
  return ppp_curve_with_others(scenario, false);
}

OutageCurve outage_multilane_ppp(const LinkScenario& scenario) {
  return ppp_curve_with_others(scenario, true);
}

OutageCurve outage_own_lane_ppp_integral(const LinkScenario& scenario) {
  scenario.validate();
  const double eta = scenario.eta;
  const double lambda = scenario.own_lane.lambda();
  // Smooth forms of the beam integrals: v = w^{(eta-1)/eta} removes the
  // endpoint singularity for 1 < eta < 2.
  const double p = eta / (eta - 1.0);
  const auto behind_unit = [&](double theta) {
    const auto f = [&](double w) {
      return 1.0 / (1.0 + theta * std::pow(w, p));
    };
    return theta / (eta - 1.0) * integrate(f, 0.0, 1.0, 1e-12).value;
  };
  const auto front_unit = [&]() {
    const auto head = [&](double w) { return 1.0 / (1.0 + std::pow(w, eta)); };
    const auto tail = [&](double w) {
      return 1.0 / (1.0 + std::pow(w, p));
    };
    return integrate(head, 0.0, 1.0, 1e-12).value +
           integrate(tail, 0.0, 1.0, 1e-12).value / (eta - 1.0);
  };
  const double front_const = front_unit();
  OutageCurve curve;
  curve.provenance = Provenance::PppAnalytic;
  curve.theta = scenario.theta_grid;
  curve.p_out.reserve(curve.theta.size());
  for (double theta : curve.theta) {
    const double a = behind_unit(theta);
    const double b = std::pow(scenario.g * theta, 1.0 / eta) * front_const;
    const auto f = [&](double r) {
      return std::exp(-lambda * scenario.xi * (a + b) * r);
    };
    const QuadResult q = integrate_exp_tail(f, 0.0, lambda, kOutageAbsTol);
    if (!q.converged) {
      throw std::runtime_error("outage quadrature did not converge");
    }
    curve.p_out.push_back(1.0 - q.value);
  }
  clamp_unit(curve.p_out);
  return curve;
}

OutageCurve outage_other_lane_hc(const HardcoreLaneModel& other,
                                 const LinkScenario& scenario, double r0) {
  scenario.validate();
  const ShiftedGammaApprox sg =
      shifted_gamma_from_moments(moments_other_lane(other, scenario, r0));
  OutageCurve curve;
  curve.provenance = Provenance::HcAnalytic;
  curve.theta = scenario.theta_grid;
  curve.p_out.reserve(curve.theta.size());
  for (double theta : curve.theta) {
    const auto lt_product = [&](double s, double) { return sg.laplace(s); };
    const double success =
        LinkAverager::hc(scenario.own_lane, lt_product, theta, scenario.eta);
    curve.p_out.push_back(1.0 - success);
  }
  clamp_unit(curve.p_out);
  return curve;
}

OutageCurve outage_other_lane_ppp(double lambda_other,
                                  const LinkScenario& scenario, double r0) {
  scenario.validate();
  if (!(lambda_other > 0.0)) {
    throw std::invalid_argument("outage_other_lane_ppp: lambda must be > 0");
  }
  const double lambda = scenario.own_lane.lambda();
  OutageCurve curve;
  curve.provenance = Provenance::PppAnalytic;
  curve.theta = scenario.theta_grid;
  curve.p_out.reserve(curve.theta.size());
  for (double theta : curve.theta) {
    const auto lt_product = [&](double, double r) {
      return std::exp(-lambda_other * scenario.xi * (1.0 + scenario.g) *
                      guardzone_t(r, r0, theta, scenario.eta));
    };
    const double success =
        LinkAverager::ppp(lambda, lt_product, theta, scenario.eta);
    curve.p_out.push_back(1.0 - success);
  }
  clamp_unit(curve.p_out);
  return curve;
}

}  // namespace hcvanet
