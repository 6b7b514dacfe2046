#include "fhsic/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace fhsic {

void WeightScheme::validate() const {
  if (!(gamma > 0.0) || !(gamma <= 1.0) || !std::isfinite(gamma)) {
    throw std::domain_error("WeightScheme: gamma must lie in (0, 1]");
  }
}

std::vector<double> weight_sequence(std::size_t n, const WeightScheme& scheme) {
  scheme.validate();
  if (n < 1) {
    throw std::invalid_argument("weight_sequence: n must be >= 1");
  }
  std::vector<double> w(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    // i = idx + 1; odd i gets 1 - gamma.
    w[idx] = (idx % 2 == 0) ? 1.0 - scheme.gamma : 1.0 + scheme.gamma;
  }
  return w;
}

}  // namespace fhsic
