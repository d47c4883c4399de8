#include "hcvanet/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace hcvanet {

namespace {

constexpr double kMuCap = 1e4;
constexpr double kRelStepTol = 1e-8;
constexpr int kEvalCap = 10000;

void check_sample(const std::vector<double>& gaps) {
  if (gaps.size() < 2) {
    throw std::invalid_argument("fit: need at least 2 gaps");
  }
  for (double g : gaps) {
    if (!(g > 0.0) || !std::isfinite(g)) {
      throw std::invalid_argument("fit: gaps must be positive and finite");
    }
  }
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double stddev_of(const std::vector<double>& v, double mean) {
  double s = 0.0;
  for (double x : v) s += (x - mean) * (x - mean);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double t = pos - static_cast<double>(lo);
  return sorted[lo] + t * (sorted[lo + 1] - sorted[lo]);
}

double shifted_exp_cdf(double x, double c, double mu) {
  if (x <= c) return 0.0;
  return 1.0 - std::exp(-mu * (x - c));
}

// Minimizes a unimodal function on [a, b]; deterministic, cap on evaluations.
// Returns the midpoint of the final bracket; sets *converged.
template <typename F>
double golden_min(F f, double a, double b, bool* converged) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  int evals = 2;
  while (b - a > kRelStepTol * (std::abs(a) + std::abs(b) + 1.0)) {
    if (evals >= kEvalCap) {
      *converged = false;
      return 0.5 * (a + b);
    }
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
    ++evals;
  }
  *converged = true;
  return 0.5 * (a + b);
}

struct LsqData {
  std::vector<double> x;     // bin edges
  std::vector<double> ecdf;  // sample CDF at the edges
};

LsqData make_lsq_data(std::vector<double> gaps,
                      const std::vector<double>& bins) {
  std::sort(gaps.begin(), gaps.end());
  LsqData d;
  d.x = bins;
  d.ecdf.reserve(bins.size());
  const double n = static_cast<double>(gaps.size());
  for (double edge : bins) {
    const auto it = std::upper_bound(gaps.begin(), gaps.end(), edge);
    d.ecdf.push_back(static_cast<double>(it - gaps.begin()) / n);
  }
  return d;
}

double lsq_objective(const LsqData& d, double c, double mu) {
  double rss = 0.0;
  for (std::size_t i = 0; i < d.x.size(); ++i) {
    const double e = d.ecdf[i] - shifted_exp_cdf(d.x[i], c, mu);
    rss += e * e;
  }
  return rss;
}

}  // namespace

std::string fit_method_name(FitMethod m) {
  switch (m) {
    case FitMethod::PppMle:
      return "ppp";
    case FitMethod::MoM:
      return "mom";
    case FitMethod::HcMle:
      return "mle";
    case FitMethod::Lsq:
      return "lsq";
    case FitMethod::LsqFixedIntensity:
      return "lsq-fixed";
  }
  return "unknown";
}

std::string FitResult::to_json() const {
  nlohmann::json j;
  j["lane_id"] = lane_id;
  j["method"] = fit_method_name(method);
  j["lambda_hat"] = lambda_hat;
  if (method != FitMethod::PppMle) j["c_hat"] = c_hat;
  if (method == FitMethod::Lsq || method == FitMethod::LsqFixedIntensity) {
    j["rss"] = rss;
  }
  j["clamped"] = clamped;
  return j.dump();
}

FitResult fit_ppp_mle(const std::vector<double>& gaps, int lane_id) {
  check_sample(gaps);
  FitResult r;
  r.method = FitMethod::PppMle;
  r.lane_id = lane_id;
  r.lambda_hat = 1.0 / mean_of(gaps);
  r.mu_hat = r.lambda_hat;
  r.c_hat = 0.0;
  r.c_hat_raw = 0.0;
  return r;
}

FitResult fit_mom(const std::vector<double>& gaps, int lane_id) {
  check_sample(gaps);
  FitResult r;
  r.method = FitMethod::MoM;
  r.lane_id = lane_id;
  const double mean = mean_of(gaps);
  const double sd = stddev_of(gaps, mean);
  if (!(sd > 0.0)) {
    throw std::invalid_argument("fit_mom: zero sample variance");
  }
  r.c_hat_raw = mean - sd;
  if (r.c_hat_raw < 0.0) {
    r.c_hat = 0.0;
    r.clamped = true;
    r.mu_hat = 1.0 / mean;
  } else {
    r.c_hat = r.c_hat_raw;
    r.mu_hat = 1.0 / sd;
  }
  r.lambda_hat = r.mu_hat / (1.0 + r.mu_hat * r.c_hat);
  return r;
}

FitResult fit_hc_mle(const std::vector<double>& gaps, int lane_id) {
  check_sample(gaps);
  FitResult r;
  r.method = FitMethod::HcMle;
  r.lane_id = lane_id;
  const double mean = mean_of(gaps);
  r.c_hat = *std::min_element(gaps.begin(), gaps.end());
  r.c_hat_raw = r.c_hat;
  const double residual = mean - r.c_hat;
  if (!(residual > 0.0)) {
    r.mu_hat = std::numeric_limits<double>::infinity();
    r.lambda_hat = 1.0 / mean;
    r.error = true;
    r.message = "constant gaps: exponential rate degenerates to infinity";
    return r;
  }
  r.mu_hat = 1.0 / residual;
  r.lambda_hat = r.mu_hat / (1.0 + r.mu_hat * r.c_hat);
  return r;
}

std::vector<double> default_fit_bins(const std::vector<double>& gaps,
                                     std::size_t n_bins,
                                     double upper_quantile) {
  check_sample(gaps);
  std::vector<double> sorted = gaps;
  std::sort(sorted.begin(), sorted.end());
  const double hi = quantile_sorted(sorted, upper_quantile);
  std::vector<double> bins;
  bins.reserve(n_bins);
  for (std::size_t i = 0; i < n_bins; ++i) {
    bins.push_back(hi * static_cast<double>(i + 1) /
                   static_cast<double>(n_bins));
  }
  return bins;
}

FitResult fit_lsq(const std::vector<double>& gaps,
                  const std::vector<double>& bins, bool fix_intensity,
                  int lane_id) {
  check_sample(gaps);
  if (bins.size() < 5) {
    throw std::invalid_argument("fit_lsq: need at least 5 bins");
  }
  const LsqData data = make_lsq_data(gaps, bins);
  const double mean = mean_of(gaps);

  FitResult r;
  r.method = fix_intensity ? FitMethod::LsqFixedIntensity : FitMethod::Lsq;
  r.lane_id = lane_id;

  bool converged_all = true;

  if (fix_intensity) {
    const double lambda = 1.0 / mean;
    // mu is tied through 1/lambda = c + 1/mu; admissibility needs c < mean.
    const auto obj_c = [&](double c) {
      const double mu = std::min(lambda / (1.0 - lambda * c), kMuCap);
      return lsq_objective(data, c, mu);
    };
    const double c_hi = mean * (1.0 - 1e-9);
    bool conv = false;
    // Coarse grid guards against the golden bracket skipping the basin.
    double best_c = 0.0;
    double best_f = obj_c(0.0);
    constexpr int kCoarse = 64;
    for (int i = 1; i <= kCoarse; ++i) {
      const double c = c_hi * static_cast<double>(i) / kCoarse;
      const double f = obj_c(c);
      if (f < best_f) {
        best_f = f;
        best_c = c;
      }
    }
    const double step = c_hi / kCoarse;
    const double lo = std::max(0.0, best_c - step);
    const double hi = std::min(c_hi, best_c + step);
    const double c = golden_min(obj_c, lo, hi, &conv);
    converged_all = conv;
    r.c_hat = c;
    r.c_hat_raw = c;
    r.lambda_hat = lambda;
    r.mu_hat = lambda / (1.0 - lambda * c);
    r.rss = obj_c(c);
  } else {
    std::vector<double> sorted = gaps;
    std::sort(sorted.begin(), sorted.end());
    const double c_hi = quantile_sorted(sorted, 0.5);
    const auto best_mu_for = [&](double c, bool* conv) {
      const double mu0 =
          std::min(1.0 / std::max(mean - c, 1e-9), kMuCap);
      const double t0 = std::log(mu0);
      const double half = std::log(64.0);
      const auto obj_t = [&](double t) {
        return lsq_objective(data, c, std::min(std::exp(t), kMuCap));
      };
      const double t = golden_min(obj_t, t0 - half, t0 + half, conv);
      return std::min(std::exp(t), kMuCap);
    };
    const auto obj_c = [&](double c) {
      bool conv = true;
      const double mu = best_mu_for(c, &conv);
      return lsq_objective(data, c, mu);
    };
    double best_c = 0.0;
    double best_f = obj_c(0.0);
    constexpr int kCoarse = 64;
    for (int i = 1; i <= kCoarse; ++i) {
      const double c = c_hi * static_cast<double>(i) / kCoarse;
      const double f = obj_c(c);
      if (f < best_f) {
        best_f = f;
        best_c = c;
      }
    }
    const double step = c_hi / kCoarse;
    const double lo = std::max(0.0, best_c - step);
    const double hi = std::min(c_hi, best_c + step);
    bool conv_c = false;
    const double c = golden_min(obj_c, lo, hi, &conv_c);
    bool conv_mu = false;
    const double mu = best_mu_for(c, &conv_mu);
    converged_all = conv_c && conv_mu;
    r.c_hat = c;
    r.c_hat_raw = c;
    r.mu_hat = mu;
    r.lambda_hat = mu / (1.0 + mu * c);
    r.rss = lsq_objective(data, c, mu);
  }

  if (!converged_all) {
    r.error = true;
    r.message = "line search hit the evaluation cap; returning best iterate";
  }
  return r;
}

FitResult fit_lsq(const std::vector<double>& gaps, bool fix_intensity,
                  int lane_id) {
  return fit_lsq(gaps, default_fit_bins(gaps), fix_intensity, lane_id);
}

}  // namespace hcvanet
