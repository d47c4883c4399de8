#include "hcvanet/kernels.hpp"

#include <atomic>
#include <cmath>

namespace hcvanet {

namespace {

std::atomic<bool> g_force_scalar{false};

// Vector fast paths exist for the exponents the propagation models use.
bool vectorizable_eta(double eta) {
  return eta == 2.0 || eta == 3.0 || eta == 4.0;
}

bool avx2_usable() {
#if defined(HCVANET_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

}  // namespace

bool cpu_has_avx2() { return avx2_usable(); }

void set_force_scalar_kernels(bool force) {
  g_force_scalar.store(force, std::memory_order_relaxed);
}

bool force_scalar_kernels() {
  return g_force_scalar.load(std::memory_order_relaxed);
}

const char* active_kernel_name(double eta) {
  if (!force_scalar_kernels() && avx2_usable() && vectorizable_eta(eta)) {
    return "avx2";
  }
  return "scalar";
}

double sum_pathloss(const double* dist, const double* fade, std::size_t n,
                    double eta) {
#if defined(HCVANET_HAVE_AVX2_TU)
  if (!force_scalar_kernels() && avx2_usable() && vectorizable_eta(eta)) {
    return sum_pathloss_avx2(dist, fade, n, eta);
  }
#endif
  return sum_pathloss_scalar(dist, fade, n, eta);
}

}  // namespace hcvanet
