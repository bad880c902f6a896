#include "ncopt/rng.hpp"

#include <cmath>

namespace ncopt {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t Rng::next_u64() noexcept {
  state_ += kGolden;
  return mix(state_);
}

double Rng::uniform01() noexcept {
  // 52 bits + half-ulp offset keeps the value strictly inside (0, 1).
  return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
}

double Rng::exponential(double mean) noexcept {
  return -mean * std::log(uniform01());
}

std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t stream) noexcept {
  return mix(master ^ (kGolden * (stream + 1)));
}

}  // namespace ncopt
