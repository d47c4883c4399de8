#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hcvanet/fitting.hpp"
#include "hcvanet/model.hpp"
#include "hcvanet/rng.hpp"

using hcvanet::FitMethod;
using hcvanet::FitResult;
using hcvanet::HardcoreLaneModel;
using hcvanet::Rng;
using hcvanet::RngSeed;

namespace {

std::vector<double> hardcore_sample(double lambda, double c, std::size_t n,
                                    RngSeed seed) {
  const auto m = HardcoreLaneModel::from_intensity(lambda, c);
  Rng rng(seed);
  std::vector<double> gaps(n);
  for (auto& g : gaps) g = c + rng.exponential(m.mu());
  return gaps;
}

// Noise-free sample: shifted-exponential quantiles at midpoint ranks.
std::vector<double> quantile_sample(double c, double mu, std::size_t n) {
  std::vector<double> gaps(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    gaps[i] = c - std::log(1.0 - u) / mu;
  }
  return gaps;
}

}  // namespace

TEST_SUITE("fitting") {

TEST_CASE("poisson MLE is the reciprocal sample mean") {
  const FitResult r = hcvanet::fit_ppp_mle({1.0, 2.0, 3.0}, 4);
  CHECK(r.method == FitMethod::PppMle);
  CHECK(r.lane_id == 4);
  CHECK(r.lambda_hat == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r.c_hat == 0.0);
  CHECK_FALSE(r.error);
}

TEST_CASE("method of moments on a hand-computable sample") {
  // Gaps 8, 10, 12: mean 10, sd 2, so c_hat = 8 and mu_hat = 1/2.
  const FitResult r = hcvanet::fit_mom({8.0, 10.0, 12.0});
  CHECK(r.c_hat == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(r.mu_hat == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.lambda_hat == doctest::Approx(0.1).epsilon(1e-12));
  CHECK_FALSE(r.clamped);
}

TEST_CASE("method of moments clamps a heavy-tailed sample") {
  // Standard deviation above the mean drives the raw estimate negative.
  std::vector<double> gaps(97, 0.1);
  gaps.insert(gaps.end(), 3, 100.0);
  const FitResult r = hcvanet::fit_mom(gaps);
  CHECK(r.clamped);
  CHECK(r.c_hat == 0.0);
  CHECK(r.c_hat_raw < 0.0);
  const double mean = (97 * 0.1 + 3 * 100.0) / 100.0;
  CHECK(r.lambda_hat == doctest::Approx(1.0 / mean).epsilon(1e-12));
  CHECK(r.mu_hat == doctest::Approx(1.0 / mean).epsilon(1e-12));
}

TEST_CASE("hardcore MLE pins the minimum gap") {
  const FitResult r = hcvanet::fit_hc_mle({20.0, 25.0, 31.0, 22.0});
  CHECK(r.c_hat == 20.0);
  // Residual mean is (0 + 5 + 11 + 2) / 4 = 4.5.
  CHECK(r.mu_hat == doctest::Approx(1.0 / 4.5).epsilon(1e-12));
  CHECK(r.lambda_hat == doctest::Approx(1.0 / 24.5).epsilon(1e-12));
  CHECK_FALSE(r.error);
}

TEST_CASE("hardcore MLE degenerates on constant gaps") {
  const FitResult r = hcvanet::fit_hc_mle({30.0, 30.0, 30.0});
  CHECK(r.error);
  CHECK(std::isinf(r.mu_hat));
  CHECK(r.c_hat == 30.0);
  CHECK(r.lambda_hat == doctest::Approx(1.0 / 30.0).epsilon(1e-12));
}

TEST_CASE("intensity always couples to the fitted gap law") {
  const auto gaps = hardcore_sample(0.025, 16.0, 4000, RngSeed{8, 1});
  for (const FitResult& r :
       {hcvanet::fit_mom(gaps), hcvanet::fit_hc_mle(gaps),
        hcvanet::fit_lsq(gaps, false), hcvanet::fit_lsq(gaps, true)}) {
    CHECK(r.lambda_hat ==
          doctest::Approx(r.mu_hat / (1.0 + r.mu_hat * r.c_hat)).epsilon(1e-9));
  }
}

TEST_CASE("sample validation failures") {
  CHECK_THROWS_AS(hcvanet::fit_ppp_mle({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(hcvanet::fit_mom({1.0, -2.0}), std::invalid_argument);
  CHECK_THROWS_AS(hcvanet::fit_mom({1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(hcvanet::fit_mom({1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(
      hcvanet::fit_ppp_mle({1.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("default bins increase to the stated upper quantile") {
  const auto gaps = hardcore_sample(0.025, 16.0, 5000, RngSeed{8, 2});
  const auto bins = hcvanet::default_fit_bins(gaps);
  CHECK(bins.size() == 200);
  CHECK(std::is_sorted(bins.begin(), bins.end()));
  std::vector<double> sorted = gaps;
  std::sort(sorted.begin(), sorted.end());
  const double p995 = sorted[static_cast<std::size_t>(0.995 * sorted.size())];
  CHECK(bins.back() == doctest::Approx(p995).epsilon(0.01));
}

TEST_CASE("least squares recovers a noise-free sample") {
  const auto gaps = quantile_sample(16.0, 1.0 / 24.0, 5000);
  const FitResult r = hcvanet::fit_lsq(gaps, false);
  CHECK_FALSE(r.error);
  CHECK(r.c_hat == doctest::Approx(16.0).epsilon(0.01));
  CHECK(r.mu_hat == doctest::Approx(1.0 / 24.0).epsilon(0.01));
  CHECK(r.rss < 1e-4);
}

TEST_CASE("least squares recovers simulated hardcore lanes") {
  const auto gaps = hardcore_sample(0.025, 16.0, 5000, RngSeed{8, 3});
  const FitResult r = hcvanet::fit_lsq(gaps, false);
  CHECK_FALSE(r.error);
  CHECK(r.c_hat == doctest::Approx(16.0).epsilon(0.05));
  CHECK(r.lambda_hat == doctest::Approx(0.025).epsilon(0.03));
  CHECK(r.method == FitMethod::Lsq);
}

TEST_CASE("fixed-intensity variant pins the reciprocal mean") {
  const auto gaps = hardcore_sample(0.025, 16.0, 5000, RngSeed{8, 4});
  const FitResult r = hcvanet::fit_lsq(gaps, true);
  double mean = 0.0;
  for (double g : gaps) mean += g;
  mean /= static_cast<double>(gaps.size());
  CHECK(r.method == FitMethod::LsqFixedIntensity);
  CHECK(r.lambda_hat == doctest::Approx(1.0 / mean).epsilon(1e-12));
  // The gap rate stays tied to the intensity through the mean identity.
  CHECK(r.mu_hat ==
        doctest::Approx(r.lambda_hat / (1.0 - r.lambda_hat * r.c_hat))
            .epsilon(1e-9));
  CHECK(r.c_hat == doctest::Approx(16.0).epsilon(0.08));
}

TEST_CASE("estimators concentrate as samples grow") {
  const RngSeed seed{8, 5};
  int good = 0;
  const int trials = 20;
  for (int t = 0; t < trials; ++t) {
    const auto gaps = hardcore_sample(0.025, 16.0, 10000, seed.substream(t));
    const FitResult mom = hcvanet::fit_mom(gaps);
    const FitResult mle = hcvanet::fit_hc_mle(gaps);
    const bool ok = std::abs(mom.c_hat / 16.0 - 1.0) < 0.05 &&
                    std::abs(mle.c_hat / 16.0 - 1.0) < 0.005 &&
                    std::abs(mom.lambda_hat / 0.025 - 1.0) < 0.02;
    good += ok;
  }
  CHECK(good >= 18);
}

TEST_CASE("fit serialization carries the method-specific fields") {
  const auto gaps = hardcore_sample(0.02, 10.0, 1000, RngSeed{8, 6});
  const std::string ppp = hcvanet::fit_ppp_mle(gaps, 2).to_json();
  CHECK(ppp.find("\"lane_id\":2") != std::string::npos);
  CHECK(ppp.find("\"method\":\"ppp\"") != std::string::npos);
  CHECK(ppp.find("c_hat") == std::string::npos);
  const std::string lsq = hcvanet::fit_lsq(gaps, false, 2).to_json();
  CHECK(lsq.find("\"method\":\"lsq\"") != std::string::npos);
  CHECK(lsq.find("c_hat") != std::string::npos);
  CHECK(lsq.find("rss") != std::string::npos);
}

}  // TEST_SUITE
