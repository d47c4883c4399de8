#include <cmath>

#include "doctest.h"
#include "hcvanet/quadrature.hpp"
#include "hcvanet/special.hpp"

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Independent oracle for the upper regularized gamma: the defining integral
// Gamma(k, x) = int_x^inf t^{k-1} e^{-t} dt, log-scaled to dodge overflow.
double gamma_q_oracle(int k, double x) {
  if (x == 0.0) return 1.0;
  const auto f = [&](double t) {
    return std::pow(t, static_cast<double>(k - 1));
  };
  const auto q = hcvanet::integrate_exp_tail(f, x, 1.0, 0.0);
  return std::exp(-x + std::log(q.value) - std::lgamma(k));
}

// Independent oracle for 2F1(1, b; b+1; -x): the Euler integral
// b * int_0^1 t^{b-1} / (1 + x t) dt = int_0^1 du / (1 + x u^{1/b}).
double euler_oracle(double b, double x) {
  const auto f = [&](double u) {
    return 1.0 / (1.0 + x * std::pow(u, 1.0 / b));
  };
  return hcvanet::integrate(f, 0.0, 1.0, 1e-13).value;
}

}  // namespace

TEST_SUITE("special") {

TEST_CASE("gamma tail matches elementary closed forms") {
  // k = 1 reduces to e^{-x}; k = 2 to (1 + x) e^{-x}.
  for (double x : {0.0, 0.2, 1.0, 3.0, 10.0, 40.0}) {
    CHECK(hcvanet::gamma_q_int(1, x) == doctest::Approx(std::exp(-x)).epsilon(1e-14));
    CHECK(hcvanet::gamma_q_int(2, x) ==
          doctest::Approx((1.0 + x) * std::exp(-x)).epsilon(1e-14));
  }
  CHECK(hcvanet::gamma_q_int(2, 1.0) == doctest::Approx(2.0 / std::exp(1.0)));
}

TEST_CASE("gamma tail matches the quadrature oracle") {
  for (int k : {1, 3, 7, 15, 30}) {
    for (double x : {0.0, 0.5, 2.0, 9.0, 27.0, 50.0}) {
      CHECK(hcvanet::gamma_q_int(k, x) ==
            doctest::Approx(gamma_q_oracle(k, x)).epsilon(5e-13));
    }
  }
}

TEST_CASE("gamma tail monotonicity and bounds") {
  for (int k = 1; k <= 30; ++k) {
    double prev = 1.0;
    for (double x = 0.0; x <= 50.0; x += 0.5) {
      const double q = hcvanet::gamma_q_int(k, x);
      CHECK(q >= 0.0);
      CHECK(q <= 1.0);
      CHECK(q <= prev + 1e-15);
      prev = q;
      if (k > 1) CHECK(q >= hcvanet::gamma_q_int(k - 1, x) - 1e-15);
    }
  }
}

TEST_CASE("hypergeometric value at zero and the pi/4 identity") {
  for (double b : {0.05, 0.3, 0.5, 0.8, 0.95}) {
    CHECK(hcvanet::hyp2f1_1b(b, 0.0) == 1.0);
  }
  // 2F1(1, 1/2; 3/2; -1) = pi / 4, reached through the outage wrapper at
  // eta = 2, theta = 1.
  CHECK(hcvanet::hyp2f1_outage(2.0, 1.0) ==
        doctest::Approx(kPi / 4.0).epsilon(1e-14));
}

TEST_CASE("hypergeometric matches the Euler-integral oracle") {
  // Arguments straddle both internal regime switches.
  const double args[] = {1e-4, 0.1,  0.45, 0.5, 0.55, 1.0,
                         1.9,  2.0,  2.1,  5.0, 50.0, 1e4};
  for (double b : {1.0 / 6, 1.0 / 3, 0.5, 2.0 / 3, 5.0 / 6}) {
    for (double x : args) {
      CHECK(hcvanet::hyp2f1_1b(b, x) ==
            doctest::Approx(euler_oracle(b, x)).epsilon(2e-10));
    }
  }
}

TEST_CASE("wrappers agree with the underlying kernel") {
  for (double eta : {1.5, 2.0, 3.0, 4.0, 6.0}) {
    for (double x : {0.0, 0.7, 3.0, 200.0}) {
      CHECK(hcvanet::hyp2f1_outage(eta, x) ==
            hcvanet::hyp2f1_1b(1.0 - 1.0 / eta, x));
      CHECK(hcvanet::hyp2f1_guardzone(eta, x) ==
            hcvanet::hyp2f1_1b(1.0 / eta, x));
    }
  }
}

TEST_CASE("hypergeometric decreasing in x, bounded by (0, 1]") {
  for (double b : {0.2, 0.5, 0.75}) {
    double prev = 1.0 + 1e-15;
    for (double x = 0.0; x <= 100.0; x += 0.25) {
      const double v = hcvanet::hyp2f1_1b(b, x);
      CHECK(v > 0.0);
      CHECK(v <= prev);
      prev = v;
    }
  }
}

TEST_CASE("large-argument decay follows the connection formula head term") {
  // 2F1(1, b; b+1; -x) ~ b pi / sin(b pi) * x^{-b} as x -> inf.
  const double b = 2.0 / 3.0;
  const double x = 1e6;
  const double head = b * kPi / std::sin(b * kPi) * std::pow(x, -b);
  CHECK(hcvanet::hyp2f1_1b(b, x) == doctest::Approx(head).epsilon(1e-3));
}

}  // TEST_SUITE
