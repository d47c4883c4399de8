#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hcvanet/quadrature.hpp"

TEST_SUITE("quadrature") {

TEST_CASE("polynomials integrate to machine precision") {
  const auto cubic = [](double x) { return x * x * x - 2.0 * x + 1.0; };
  const auto r = hcvanet::integrate(cubic, 0.0, 2.0, 1e-12);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(r.converged);
  CHECK(r.error_estimate >= 0.0);
}

TEST_CASE("smooth transcendental integrands") {
  const auto r1 = hcvanet::integrate([](double x) { return std::sin(x); }, 0.0,
                                     3.141592653589793, 1e-12);
  CHECK(r1.value == doctest::Approx(2.0).epsilon(1e-13));
  const auto r2 = hcvanet::integrate([](double x) { return std::exp(-x * x); },
                                     -6.0, 6.0, 1e-12);
  CHECK(r2.value == doctest::Approx(std::sqrt(3.141592653589793)).epsilon(1e-12));
}

TEST_CASE("integrable endpoint singularity") {
  const auto r = hcvanet::integrate([](double x) { return 1.0 / std::sqrt(x); },
                                    0.0, 1.0, 1e-9);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("degenerate and invalid ranges") {
  const auto r = hcvanet::integrate([](double x) { return x; }, 1.0, 1.0);
  CHECK(r.value == 0.0);
  CHECK(r.converged);
  CHECK_THROWS_AS(hcvanet::integrate([](double x) { return x; }, 2.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("exponential tail transform reproduces moment identities") {
  // With f == 1 the weight integrates to one for any rate and offset.
  for (double mu : {0.04, 1.0, 7.5}) {
    for (double lo : {0.0, 16.0}) {
      const auto total = hcvanet::integrate_exp_tail(
          [](double) { return 1.0; }, lo, mu, 1e-12);
      CHECK(total.value == doctest::Approx(1.0).epsilon(1e-12));
      // E[r] = lo + 1/mu under the shifted exponential weight.
      const auto mean = hcvanet::integrate_exp_tail(
          [](double r) { return r; }, lo, mu, 1e-12);
      CHECK(mean.value == doctest::Approx(lo + 1.0 / mu).epsilon(1e-11));
    }
  }
  // E[r^2] at lo = 0 is 2 / mu^2.
  const double mu = 0.5;
  const auto second = hcvanet::integrate_exp_tail(
      [](double r) { return r * r; }, 0.0, mu, 1e-12);
  CHECK(second.value == doctest::Approx(2.0 / (mu * mu)).epsilon(1e-10));
}

TEST_CASE("exponential tail transform with an oscillatory factor") {
  // int_0^inf cos(r) e^{-r} dr = 1/2.
  const auto r = hcvanet::integrate_exp_tail(
      [](double x) { return std::cos(x); }, 0.0, 1.0, 1e-11);
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("exponential tail transform rejects nonpositive rates") {
  CHECK_THROWS_AS(
      hcvanet::integrate_exp_tail([](double) { return 1.0; }, 0.0, 0.0),
      std::invalid_argument);
  CHECK_THROWS_AS(
      hcvanet::integrate_exp_tail([](double) { return 1.0; }, 0.0, -1.0),
      std::invalid_argument);
}

TEST_CASE("tight tolerance forces convergence reporting") {
  const auto r = hcvanet::integrate([](double x) { return std::cos(3.0 * x); },
                                    0.0, 10.0, 1e-12);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(std::sin(30.0) / 3.0).epsilon(1e-11));
  CHECK(r.evaluations > 0);
}

}  // TEST_SUITE
