#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fhsic/rng.hpp"

using namespace fhsic;

TEST_CASE("streams are reproducible and distinct") {
  RngStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  bool same_ab = true, same_ac = true, same_ad = true;
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next_u64();
    same_ab &= (va == b.next_u64());
    same_ac &= (va == c.next_u64());
    same_ad &= (va == d.next_u64());
  }
  CHECK(same_ab);
  CHECK_FALSE(same_ac);
  CHECK_FALSE(same_ad);
}

TEST_CASE("uniform draws stay strictly inside (0, 1)") {
  RngStream rng(1, 0);
  double sum = 0.0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const double u = rng.next_uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / draws == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("cauchy draws have the right median and quartiles") {
  RngStream rng(9, 2);
  const int draws = 100000;
  std::vector<double> xs(draws);
  for (double& x : xs) x = rng.next_cauchy(0.0, 0.5);
  std::sort(xs.begin(), xs.end());
  const double median = xs[draws / 2];
  const double q1 = xs[draws / 4];
  const double q3 = xs[(3 * draws) / 4];
  // Quartiles of Cauchy(0, s) sit at -s and s, so the IQR is 2s.
  CHECK(std::abs(median) <= 0.02);
  CHECK(q3 - q1 == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("normal draws have the right first two moments") {
  RngStream rng(123, 1);
  const int draws = 100000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double z = rng.next_normal();
    sum += z;
    sum_sq += z * z;
  }
  const double mean = sum / draws;
  const double var = sum_sq / draws - mean * mean;
  CHECK(std::abs(mean) <= 0.02);
  CHECK(var == doctest::Approx(1.0).epsilon(0.02));
}
