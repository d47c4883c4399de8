#include <immintrin.h>

#include "hcvanet/kernels.hpp"

namespace hcvanet {

namespace {

inline __m256d pow_int(__m256d d, int eta) {
  const __m256d d2 = _mm256_mul_pd(d, d);
  switch (eta) {
    case 2:
      return d2;
    case 3:
      return _mm256_mul_pd(d2, d);
    default:
      return _mm256_mul_pd(d2, d2);
  }
}

inline double pow_int(double d, int eta) {
  const double d2 = d * d;
  switch (eta) {
    case 2:
      return d2;
    case 3:
      return d2 * d;
    default:
      return d2 * d2;
  }
}

}  // namespace

// Valid only for eta in {2, 3, 4}; the dispatcher guarantees that.
double sum_pathloss_avx2(const double* dist, const double* fade, std::size_t n,
                         double eta) {
  const int k = static_cast<int>(eta);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_loadu_pd(dist + i);
    const __m256d h = _mm256_loadu_pd(fade + i);
    acc = _mm256_add_pd(acc, _mm256_div_pd(h, pow_int(d, k)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) {
    sum += fade[i] / pow_int(dist[i], k);
  }
  return sum;
}

}  // namespace hcvanet
