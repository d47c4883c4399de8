#include "hcvanet/special.hpp"

#include <cmath>
#include <stdexcept>

namespace hcvanet {

double gamma_q_int(int k, double x) {
  if (k < 1) throw std::invalid_argument("gamma_q_int: k must be >= 1");
  if (x < 0.0 || !std::isfinite(x)) throw std::invalid_argument("gamma_q_int: x must be finite and >= 0");
  if (x == 0.0) return 1.0;
  double term = std::exp(-x);  // j = 0
  double sum = term;
  for (int j = 1; j < k; ++j) {
    term *= x / j;
    sum += term;
  }
  return sum < 1.0 ? sum : 1.0;
}

namespace {

constexpr double kEps = 1e-17;
constexpr int kMaxTerms = 2000;

// Direct series: sum_n b/(b+n) (-x)^n, |x| < 1.
double series_small(double b, double x) {
  double sum = 1.0;
  double xn = 1.0;
  for (int n = 1; n < kMaxTerms; ++n) {
    xn *= -x;
    const double term = b / (b + n) * xn;
    sum += term;
    if (std::fabs(term) < kEps * std::fabs(sum)) return sum;
  }
  throw std::runtime_error("hyp2f1_1b: small-x series did not converge");
}

// Pfaff transform: (1+x)^-b 2F1(b, b; b+1; x/(1+x)); all terms positive.
double series_pfaff(double b, double x) {
  const double w = x / (1.0 + x);
  double term = 1.0;  // n = 0: (b)_n w^n / n! * b/(b+n) = 1
  double sum = term;
  for (int n = 0; n < kMaxTerms; ++n) {
    const double bn = b + n;
    term *= w * bn * bn / ((n + 1.0) * (bn + 1.0));
    sum += term;
    if (term < kEps * sum) return std::pow(1.0 + x, -b) * sum;
  }
  throw std::runtime_error("hyp2f1_1b: Pfaff series did not converge");
}

// Connection formula at 1/x:
//   b*pi*csc(pi*b) x^-b - b * sum_m (-1)^m x^-(m+1) / (1 - b + m), x > 1.
double series_large(double b, double x) {
  double sum = 0.0;
  double xm = 1.0 / x;
  for (int m = 0; m < kMaxTerms; ++m) {
    const double term = (m % 2 == 0 ? xm : -xm) / (1.0 - b + m);
    sum += term;
    if (std::fabs(term) < kEps * std::fabs(sum) + 1e-300) break;
    xm /= x;
  }
  const double lead = b * M_PI / std::sin(M_PI * b) * std::pow(x, -b);
  return lead - b * sum;
}

}  // namespace

double hyp2f1_1b(double b, double x) {
  if (!(b > 0.0 && b < 1.0)) throw std::invalid_argument("hyp2f1_1b: b must be in (0, 1)");
  if (x < 0.0 || !std::isfinite(x)) throw std::invalid_argument("hyp2f1_1b: x must be finite and >= 0");
  if (x == 0.0) return 1.0;
  if (x <= 0.5) return series_small(b, x);
  if (x < 2.0) return series_pfaff(b, x);
  return series_large(b, x);
}

double hyp2f1_outage(double eta, double theta) {
  if (!(eta > 1.0)) throw std::invalid_argument("hyp2f1_outage: eta must be > 1");
  return hyp2f1_1b(1.0 - 1.0 / eta, theta);
}

double hyp2f1_guardzone(double eta, double z) {
  if (!(eta > 1.0)) throw std::invalid_argument("hyp2f1_guardzone: eta must be > 1");
  return hyp2f1_1b(1.0 / eta, z);
}

}  // namespace hcvanet
