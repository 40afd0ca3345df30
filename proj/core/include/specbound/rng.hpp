#pragma once

#include <complex>
#include <cstdint>

namespace specbound {

// splitmix64: tiny counter-based generator with a strong 64 -> 64 mixing
// function, so nearby seeds still give statistically independent streams.
// That property is load-bearing: per-trial streams are seeded with
// config_seed XOR trial_index and must not correlate.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Uniform on [0, 1) with 53 random bits.
  double uniform01();

  // Standard complex normal via Box-Muller; the two coordinates of each pair
  // are consumed in a fixed order, keeping the stream deterministic.
  double normal();

  // Uniform on the closed unit disk (area measure).
  std::complex<double> unit_disk();

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace specbound
