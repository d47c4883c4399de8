#ifndef HCVANET_FITTING_HPP
#define HCVANET_FITTING_HPP

#include <string>
#include <vector>

namespace hcvanet {

enum class FitMethod { PppMle, MoM, HcMle, Lsq, LsqFixedIntensity };

std::string fit_method_name(FitMethod m);

struct FitResult {
  FitMethod method = FitMethod::PppMle;
  int lane_id = 0;
  double lambda_hat = 0.0;
  double c_hat = 0.0;      // admissible: 0 <= c_hat < 1/lambda_hat
  double c_hat_raw = 0.0;  // pre-clamp value; equals c_hat unless clamped
  double mu_hat = 0.0;     // rate of the exponential gap part
  double rss = 0.0;        // least-squares objective at the optimum; 0 otherwise
  bool clamped = false;
  bool error = false;
  std::string message;

  std::string to_json() const;
};

// Gap samples must be positive; every estimator requires n >= 2.
FitResult fit_ppp_mle(const std::vector<double>& gaps, int lane_id = 0);

// Moment matching on mean and standard deviation. A heavy left tail can push
// the raw hardcore estimate negative; it is clamped to 0 and flagged.
FitResult fit_mom(const std::vector<double>& gaps, int lane_id = 0);

// Hardcore distance from the sample minimum, exponential rate from the
// residual mean. Constant samples degenerate to an infinite rate.
FitResult fit_hc_mle(const std::vector<double>& gaps, int lane_id = 0);

// Equal-width bins from 0 to the given upper quantile of the sample.
std::vector<double> default_fit_bins(const std::vector<double>& gaps,
                                     std::size_t n_bins = 200,
                                     double upper_quantile = 0.995);

// Least squares between the sample ECDF and the shifted-exponential CDF
// (1 - e^{-mu (x - c)})+, over (c, mu). With fix_intensity the intensity is
// pinned to the PPP MLE and mu is tied to c through 1/lambda = c + 1/mu,
// leaving a single search parameter. Deterministic; golden-section search,
// relative step tolerance 1e-8, evaluation cap 1e4 per line search.
FitResult fit_lsq(const std::vector<double>& gaps,
                  const std::vector<double>& bins, bool fix_intensity,
                  int lane_id = 0);
FitResult fit_lsq(const std::vector<double>& gaps, bool fix_intensity,
                  int lane_id = 0);

}  // namespace hcvanet

#endif
