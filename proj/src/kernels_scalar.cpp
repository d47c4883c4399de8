#include <cmath>

#include "hcvanet/kernels.hpp"

namespace hcvanet {

// Reference implementation; every other variant must agree with this one.
double sum_pathloss_scalar(const double* dist, const double* fade,
                           std::size_t n, double eta) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += fade[i] * std::pow(dist[i], -eta);
  }
  return sum;
}

}  // namespace hcvanet
