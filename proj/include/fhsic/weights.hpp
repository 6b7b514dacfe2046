#pragma once

#include <cstddef>
#include <vector>

namespace fhsic {

enum class WeightKind { alternating };

// Alternating weight scheme w_i = 1 + (-1)^i * gamma, i = 1..n, so the
// first weight is 1 - gamma. Weights are positive, bounded by 1 + gamma,
// their mean stays within gamma/n of 1, and the mean of their squares
// converges to 1 + gamma^2 (> 1).
struct WeightScheme {
  double gamma = 0.32;
  WeightKind kind = WeightKind::alternating;

  WeightScheme() = default;
  explicit WeightScheme(double g) : gamma(g) {}

  // Limit of the mean squared weight: 1 + gamma^2.
  double w_sq_limit() const { return 1.0 + gamma * gamma; }

  void validate() const;  // throws std::domain_error unless 0 < gamma <= 1
};

// The first n weights of the scheme. n >= 1.
std::vector<double> weight_sequence(std::size_t n, const WeightScheme& scheme);

}  // namespace fhsic
