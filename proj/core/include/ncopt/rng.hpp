#pragma once

#include <cstdint>

namespace ncopt {

// SplitMix64 stream. All Monte Carlo draws in the library go through this
// generator so identical seeds give bit-identical streams on every
// platform, which the CSV regression surface depends on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() noexcept;

  // Uniform strictly inside (0, 1): 52 mantissa bits plus a half-ulp
  // offset, so log() of the result is always finite.
  double uniform01() noexcept;

  // Inverse-CDF exponential draw with the given mean.
  double exponential(double mean) noexcept;

 private:
  std::uint64_t state_;
};

// Counter-based sub-seeding: stream `k` of a master seed is a fixed
// function of (master, k), independent of how many sibling streams exist
// or in which order they are consumed. Trials keyed by stream index can
// therefore run concurrently and still reproduce.
std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t stream) noexcept;

}  // namespace ncopt
