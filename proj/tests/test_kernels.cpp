#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "hcvanet/kernels.hpp"
#include "hcvanet/rng.hpp"

using hcvanet::RngSeed;

namespace {

struct ScalarForcer {
  explicit ScalarForcer(bool on) { hcvanet::set_force_scalar_kernels(on); }
  ~ScalarForcer() { hcvanet::set_force_scalar_kernels(false); }
};

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar reference on hand values") {
  const double dist[] = {1.0, 2.0, 4.0};
  const double fade[] = {1.0, 1.0, 2.0};
  // 1 + 1/4 + 2/16 = 1.375 at eta = 2.
  CHECK(hcvanet::sum_pathloss_scalar(dist, fade, 3, 2.0) ==
        doctest::Approx(1.375).epsilon(1e-15));
  // Empty input sums to zero.
  CHECK(hcvanet::sum_pathloss_scalar(dist, fade, 0, 2.0) == 0.0);
  CHECK(hcvanet::sum_pathloss(dist, fade, 0, 3.0) == 0.0);
}

TEST_CASE("dispatched kernel matches the scalar reference") {
  hcvanet::Rng rng(RngSeed{321, 0});
  // Lengths around the vector width cover every remainder path.
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 31u, 64u, 67u}) {
    std::vector<double> dist(n), fade(n);
    for (std::size_t i = 0; i < n; ++i) {
      dist[i] = 1.0 + 500.0 * rng.uniform();
      fade[i] = rng.exponential(1.0);
    }
    for (double eta : {2.0, 3.0, 3.5, 4.0}) {
      const double fast = hcvanet::sum_pathloss(dist.data(), fade.data(), n, eta);
      const double ref =
          hcvanet::sum_pathloss_scalar(dist.data(), fade.data(), n, eta);
      CHECK(fast == doctest::Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("scalar forcing reroutes dispatch") {
  {
    ScalarForcer forced(true);
    CHECK(hcvanet::force_scalar_kernels());
    CHECK(std::string(hcvanet::active_kernel_name(3.0)) == "scalar");
  }
  CHECK_FALSE(hcvanet::force_scalar_kernels());
  // Non-integer exponents always take the scalar path.
  CHECK(std::string(hcvanet::active_kernel_name(3.5)) == "scalar");
  const std::string active = hcvanet::active_kernel_name(3.0);
  if (hcvanet::cpu_has_avx2()) {
    CHECK(active == "avx2");
  } else {
    CHECK(active == "scalar");
  }
}

TEST_CASE("forced-scalar results agree with the default dispatch") {
  hcvanet::Rng rng(RngSeed{321, 1});
  const std::size_t n = 53;
  std::vector<double> dist(n), fade(n);
  for (std::size_t i = 0; i < n; ++i) {
    dist[i] = 5.0 + 300.0 * rng.uniform();
    fade[i] = rng.exponential(1.0);
  }
  for (double eta : {2.0, 3.0, 4.0}) {
    const double fast = hcvanet::sum_pathloss(dist.data(), fade.data(), n, eta);
    ScalarForcer forced(true);
    const double slow = hcvanet::sum_pathloss(dist.data(), fade.data(), n, eta);
    CHECK(fast == doctest::Approx(slow).epsilon(1e-12));
  }
}

}  // TEST_SUITE
