#pragma once

namespace fhsic {

// Standard normal CDF, evaluated through erfc for accuracy in both tails.
double normal_cdf(double z);

// Standard normal quantile. Rational initial approximation refined by two
// Halley steps; absolute error is far below 1e-9 across (0, 1).
// Throws std::domain_error unless 0 < p < 1.
double normal_quantile(double p);

}  // namespace fhsic
