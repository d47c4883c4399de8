#ifndef HCVANET_SPECIAL_HPP
#define HCVANET_SPECIAL_HPP

namespace hcvanet {

// Upper regularized incomplete gamma Q(k, x) = Gamma(k, x) / Gamma(k) for
// integer shape k >= 1 and x >= 0, via the exact finite sum
// Q(k, x) = exp(-x) * sum_{j=0}^{k-1} x^j / j!.
// Terms are Poisson probabilities, so the recursion never overflows.
double gamma_q_int(int k, double x);

// 2F1(1, b; b+1; -x) for b in (0, 1) and x >= 0. Three regimes:
// power series for small x, a Pfaff transform for x near 1, and the
// 1/x connection formula for large x. Relative accuracy ~1e-13.
double hyp2f1_1b(double b, double x);

// 2F1(1, 1 - 1/eta; 2 - 1/eta; -theta): SIR-threshold transform appearing in
// the exponential-network outage closed form. Requires eta > 1, theta >= 0.
double hyp2f1_outage(double eta, double theta);

// 2F1(1, 1/eta; 1 + 1/eta; -z): guard-zone transform for other-lane
// interference. Requires eta > 1, z >= 0.
double hyp2f1_guardzone(double eta, double z);

}  // namespace hcvanet

#endif
