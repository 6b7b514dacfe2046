#pragma once

#include <cstdint>

namespace fhsic {

// Splittable deterministic random stream (splitmix64 core). A stream is
// identified by a (seed, stream) pair; distinct pairs give statistically
// independent sequences, so parallel work can draw from per-task substreams
// without any shared state.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  // Uniform strictly inside (0, 1).
  double next_uniform();

  // Standard normal via the quantile transform.
  double next_normal();

  // location + scale * tan(pi * (u - 1/2)), u uniform on (0, 1).
  double next_cauchy(double location, double scale);

  // One-off stream derivation: a well-mixed 64-bit value for (seed, stream).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t state_;
};

}  // namespace fhsic
