#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fhsic/weights.hpp"

using namespace fhsic;

TEST_CASE("weight sequence starts at 1 - gamma and alternates") {
  const auto w = weight_sequence(4, WeightScheme(0.5));
  REQUIRE(w.size() == 4);
  CHECK(w[0] == 0.5);
  CHECK(w[1] == 1.5);
  CHECK(w[2] == 0.5);
  CHECK(w[3] == 1.5);
}

TEST_CASE("gamma domain is (0, 1]") {
  CHECK_THROWS_AS(WeightScheme(0.0).validate(), std::domain_error);
  CHECK_THROWS_AS(WeightScheme(-0.2).validate(), std::domain_error);
  CHECK_THROWS_AS(WeightScheme(1.1).validate(), std::domain_error);
  CHECK_NOTHROW(WeightScheme(1.0).validate());
  CHECK_THROWS_AS(weight_sequence(0, WeightScheme(0.5)),
                  std::invalid_argument);
}

TEST_CASE("odd-length mean deficit is exactly gamma/n") {
  const auto w = weight_sequence(3, WeightScheme(0.32));
  double mean = 0.0;
  for (double v : w) mean += v;
  mean /= 3.0;
  CHECK(3.0 * std::abs(mean - 1.0) == doctest::Approx(0.32).epsilon(1e-12));
}

TEST_CASE("squared-weight limit") {
  CHECK(WeightScheme(0.32).w_sq_limit() == doctest::Approx(1.1024));
  CHECK(WeightScheme(1.0).w_sq_limit() == 2.0);
  CHECK(WeightScheme(0.1).w_sq_limit() > 1.0);
}

TEST_CASE("scheme bounds hold for every n up to 10^4") {
  // Positivity (strict below gamma = 1, where odd positions hit exactly 0)
  // and max bound at every length; the mean stays within gamma/n of 1 and
  // the mean square within 2*gamma/n of its limit.
  for (double gamma : {0.05, 0.1, 0.32, 0.5, 0.77, 1.0}) {
    const WeightScheme scheme(gamma);
    CHECK(scheme.w_sq_limit() > 1.0);
    const auto w = weight_sequence(10000, scheme);
    double sum = 0.0, sum_sq = 0.0, max_w = 0.0;
    for (std::size_t n = 1; n <= w.size(); ++n) {
      const double v = w[n - 1];
      REQUIRE(v >= 0.0);
      if (gamma < 1.0) REQUIRE(v > 0.0);
      sum += v;
      sum_sq += v * v;
      max_w = std::max(max_w, v);
      const double dn = static_cast<double>(n);
      REQUIRE(max_w <= 1.0 + gamma);
      REQUIRE(dn * std::abs(sum / dn - 1.0) <= gamma + 1e-9);
      REQUIRE(std::abs(sum_sq / dn - scheme.w_sq_limit()) <=
              2.0 * gamma / dn + 1e-9);
    }
  }
}
