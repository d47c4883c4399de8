#ifndef HCVANET_KERNELS_HPP
#define HCVANET_KERNELS_HPP

#include <cstddef>

namespace hcvanet {

// sum_i fade[i] * dist[i]^(-eta). dist entries must be positive.
// Dispatches to a vectorized variant when the CPU supports it; the scalar
// reference is always available for equivalence checks.
double sum_pathloss(const double* dist, const double* fade, std::size_t n,
                    double eta);

double sum_pathloss_scalar(const double* dist, const double* fade,
                           std::size_t n, double eta);

#if defined(HCVANET_HAVE_AVX2_TU)
double sum_pathloss_avx2(const double* dist, const double* fade, std::size_t n,
                         double eta);
#endif

bool cpu_has_avx2();

// Test hook: route all sum_pathloss calls through the scalar kernel.
void set_force_scalar_kernels(bool force);
bool force_scalar_kernels();

// Name of the variant sum_pathloss currently dispatches to.
const char* active_kernel_name(double eta);

}  // namespace hcvanet

#endif
