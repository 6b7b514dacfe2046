#pragma once

#include <cstddef>
#include <cstdint>

#include "fhsic/hsic.hpp"
#include "fhsic/kernel.hpp"
#include "fhsic/weights.hpp"

namespace fhsic {

// Result of the asymptotic-normal independence test. The null hypothesis is
// rejected when the statistic exceeds
//   threshold = n^{-1/2} * sigma_hat * Phi^{-1}(1 - significance/2),
// equivalently when z = sqrt(n) * statistic / sigma_hat exceeds the normal
// quantile. The statistic is the weighted estimator evaluated on the
// off-diagonal part of each Gram matrix: coincident pairs compare a sample
// with itself and would otherwise add a positive O(1/n) offset that swamps
// the sigma/sqrt(n) null scale at usable sample sizes. When the estimated
// null variance is exactly zero (constant Grams carry no evidence either
// way) the outcome is flagged degenerate, with z = 0, p = 1 and no
// rejection.
struct TestOutcome {
  std::size_t n = 0;
  double gamma = 0.0;
  double significance = 0.0;
  double statistic = 0.0;      // weighted HSIC estimate
  double var_component = 0.0;  // row_mean_variance(K, L)
  double null_var = 0.0;       // 4 (w_sq_limit - 1) * var_component
  double z = 0.0;
  double p_value = 1.0;        // clamp(2 (1 - Phi(z)), 0, 1)
  double threshold = 0.0;      // reject when statistic > threshold
  bool reject = false;
  bool degenerate = false;
};

// Runs the full test on two Gram matrices. 0 < significance < 1.
TestOutcome independence_test(const GramMatrix& K, const GramMatrix& L,
                              const WeightScheme& scheme, double significance);

// Decision layer only: maps an already-computed statistic and variance
// component to the outcome. Exposed so the rejection rule can be exercised
// directly.
TestOutcome outcome_from_components(double statistic, double var_component,
                                    const WeightScheme& scheme, std::size_t n,
                                    double significance);

// Permutation baseline around the plug-in estimator: permutes the rows and
// columns of L jointly and reports
//   p = (1 + #{permuted >= observed}) / (permutations + 1).
// Each permutation draws from its own (seed, index) substream, so the
// result is deterministic for a given seed and independent of how the loop
// is scheduled across threads.
double permutation_test_naive(const GramMatrix& K, const GramMatrix& L,
                              int permutations, std::uint64_t seed);

}  // namespace fhsic
