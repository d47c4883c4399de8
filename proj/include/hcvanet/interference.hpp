#ifndef HCVANET_INTERFERENCE_HPP
#define HCVANET_INTERFERENCE_HPP

#include <string>
#include <vector>

#include "hcvanet/model.hpp"

namespace hcvanet {

// Interference power statistics under unit transmit power.
struct MomentTriple {
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
};

// Gamma(k, beta) shifted right by epsilon, moment-matched to interference.
// Laplace transform e^{-s epsilon} (1 + s beta)^{-k} stays a valid transform
// of a nonnegative variable only for epsilon >= 0, so a negative shift is
// clamped to 0 with beta refit to preserve the mean, and flagged.
struct ShiftedGammaApprox {
  double k = 0.0;
  double beta = 0.0;
  double epsilon = 0.0;
  bool clamped = false;

  double laplace(double s) const;
  MomentTriple moments() const;
};

ShiftedGammaApprox shifted_gamma_from_moments(const MomentTriple& m);

struct OtherLane {
  HardcoreLaneModel model;
  double ell = 0.0;  // lateral spacing to the link lane, meters
};

// Link on one lane plus any number of interfering lanes. Interferer activity
// is an independent thinning with probability xi; front-of-receiver and
// far-side interferers are attenuated by the backlobe factor g; phi is the
// antenna beamwidth that sets the other-lane guard zones.
struct LinkScenario {
  HardcoreLaneModel own_lane = HardcoreLaneModel::from_intensity(0.01, 0.0);
  std::vector<OtherLane> other_lanes;
  double eta = 3.0;
  double xi = 0.5;
  double g = 0.01;
  double phi = 0.15707963267948966;  // pi / 20
  std::vector<double> theta_grid;    // linear SIR thresholds, increasing

  void validate() const;
};

enum class Provenance { HcAnalytic, PppAnalytic, MonteCarlo };

std::string provenance_name(Provenance p);

struct OutageCurve {
  Provenance provenance = Provenance::HcAnalytic;
  std::vector<double> theta;  // linear
  std::vector<double> p_out;
};

double db_to_linear(double db);
double linear_to_db(double theta);

// n log-spaced thresholds between the two dB endpoints, returned linear.
std::vector<double> theta_grid_db(double lo_db, double hi_db, std::size_t n);
std::vector<double> default_theta_grid();  // 61 points over [-10, 20] dB

// Interferers closer than r0 fall outside the receive beam of width phi
// pointed along a lane at lateral distance ell.
double guard_zone(double ell, double phi);

// Moments of interference from the link lane behind the transmitter,
// conditioned on the transmitter location (link distance d).
MomentTriple palm_moments_behind(const HardcoreLaneModel& model,
                                 const LinkScenario& scenario, double d);

// Moments of backlobe interference from the link lane in front of the
// receiver; independent of the link distance. Requires c > 0: the leading
// interferer distance degenerates at c = 0, use the PPP path instead.
MomentTriple palm_moments_front(const HardcoreLaneModel& model,
                                const LinkScenario& scenario);

// Moments of interference from a lane with guard zone r0, both directions.
MomentTriple moments_other_lane(const HardcoreLaneModel& model,
                                const LinkScenario& scenario, double r0);

// Beam-head integral for the other-lane Poisson exponent:
// t = int_{r0}^inf theta r^eta x^-eta / (1 + theta r^eta x^-eta) dx.
double guardzone_t(double r, double r0, double theta, double eta);

// P(SIR < theta) for a link whose distance follows the lane gap law, with
// interference from the link lane only.
OutageCurve outage_own_lane_hc(const LinkScenario& scenario);

// Poisson baseline, closed form; intensity-invariant.
OutageCurve outage_own_lane_ppp(const LinkScenario& scenario);
// Same quantity by direct double quadrature, for cross-validation.
OutageCurve outage_own_lane_ppp_integral(const LinkScenario& scenario);

// Interference from a single other lane with guard zone r0; the link
// distance still follows the own-lane law.
OutageCurve outage_other_lane_hc(const HardcoreLaneModel& other,
                                 const LinkScenario& scenario, double r0);
OutageCurve outage_other_lane_ppp(double lambda_other,
                                  const LinkScenario& scenario, double r0);

// Product of per-lane transforms averaged over the link distance. With no
// other lanes these reduce exactly to the own-lane curves.
OutageCurve outage_multilane_hc(const LinkScenario& scenario);
OutageCurve outage_multilane_ppp(const LinkScenario& scenario);

}  // namespace hcvanet

#endif
