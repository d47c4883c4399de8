#ifndef HCVANET_QUADRATURE_HPP
#define HCVANET_QUADRATURE_HPP

#include <functional>

namespace hcvanet {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Adaptive Gauss-Kronrod (G7, K15) on [a, b]. Bisects the worst interval until
// the summed error estimate is below max(abs_tol, rel_tol * |value|) or the
// interval budget runs out.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-10, double rel_tol = 0.0,
                     int max_intervals = 4000);

// integral_{lo}^{inf} f(r) * mu * exp(-mu (r - lo)) dr via the substitution
// u = exp(-mu (r - lo)), which maps the tail onto (0, 1]. f must be bounded.
QuadResult integrate_exp_tail(const std::function<double(double)>& f, double lo,
                              double mu, double abs_tol = 1e-8);

}  // namespace hcvanet

#endif
