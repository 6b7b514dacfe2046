#include "fhsic/rng.hpp"

#include <cmath>

#include "fhsic/normal_dist.hpp"

namespace fhsic {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer.
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : state_(derive(seed, stream)) {}

std::uint64_t RngStream::derive(std::uint64_t seed, std::uint64_t stream) {
  return mix(mix(seed + kGolden) ^ mix(stream + 0xD1B54A32D192ED03ull));
}

std::uint64_t RngStream::next_u64() {
  state_ += kGolden;
  return mix(state_);
}

double RngStream::next_uniform() {
  // (k + 1/2) * 2^-53 with k in [0, 2^53): strictly inside (0, 1).
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::next_normal() { return normal_quantile(next_uniform()); }

double RngStream::next_cauchy(double location, double scale) {
  const double pi = std::acos(-1.0);
  return location + scale * std::tan(pi * (next_uniform() - 0.5));
}

}  // namespace fhsic
