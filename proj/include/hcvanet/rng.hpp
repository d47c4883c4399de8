#ifndef HCVANET_RNG_HPP
#define HCVANET_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace hcvanet {

// (seed, stream) pair addressing a reproducible substream. Streams derived
// from the same seed but different stream ids are statistically independent,
// so parallel runs can hash their run index into the stream id and merge
// results independent of worker count.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  RngSeed substream(std::uint64_t index) const;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed;
  std::uint64_t h = splitmix64(state);
  state = h ^ (stream + 0x9E3779B97F4A7C15ULL);
  h = splitmix64(state);
  state = h;
  return splitmix64(state);
}
}  // namespace detail

inline RngSeed RngSeed::substream(std::uint64_t index) const {
  return {seed, detail::mix(stream, index)};
}

// mt19937_64 (engine output is fully specified by the standard) with explicit
// bit-to-double mappings, so draws are reproducible across library versions.
class Rng {
 public:
  explicit Rng(RngSeed s) : eng_(detail::mix(s.seed, s.stream)) {}
  Rng(std::uint64_t seed, std::uint64_t stream) : Rng(RngSeed{seed, stream}) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform on (0, 1]: never returns 0, so log(uniform()) is always finite.
  double uniform() {
    return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
  }

  double exponential(double rate) { return -std::log(uniform()) / rate; }

  bool bernoulli(double p) { return uniform() <= p; }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace hcvanet

#endif
