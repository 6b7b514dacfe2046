#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "fhsic/kernel.hpp"
#include "fhsic/weights.hpp"

namespace fhsic {

// One HSIC estimate. gamma is absent for the plain plug-in estimator and
// carries the weight parameter for the reweighted one.
struct HsicEstimate {
  double value = 0.0;
  std::size_t n = 0;
  std::optional<double> gamma;
};

// Plug-in HSIC estimator from two Gram matrices of the same sample size:
//
//   n^-2 sum_ij k_ij l_ij + n^-4 (sum_ij k_ij)(sum_qr l_qr)
//     - 2 n^-3 sum_i (sum_j k_ij)(sum_q l_iq)
//
// computed in the factorized row-sum/grand-sum form, O(n^2) time. Requires
// n >= 2 and matching dimensions.
HsicEstimate naive_hsic(const GramMatrix& K, const GramMatrix& L);

// Reweighted estimator: identical to naive_hsic except that the cross term
// sum carries per-sample weights,
//   - 2 n^-3 sum_i w_i (sum_j k_ij)(sum_q l_iq).
// With all-ones weights this reduces to the plug-in estimator. Weights must
// be positive and attach to sample positions, so the value depends on the
// sample ordering. Throws std::invalid_argument on dimension mismatch and
// std::domain_error on a non-positive weight.
HsicEstimate weighted_hsic(const GramMatrix& K, const GramMatrix& L,
                           std::span<const double> weights);

// Convenience overload: weights generated from the scheme, estimate tagged
// with its gamma.
HsicEstimate weighted_hsic(const GramMatrix& K, const GramMatrix& L,
                           const WeightScheme& scheme);

// Variance, over rows, of the row means of the entrywise product k_ij*l_ij:
//
//   n^-1 sum_i ( n^-1 sum_j k_ij l_ij - n^-2 sum_mp k_mp l_mp )^2
//
// This is the plug-in component of the null variance of the reweighted
// estimator. Always >= 0.
double row_mean_variance(const GramMatrix& K, const GramMatrix& L);

// Null variance of sqrt(n) * weighted_hsic under independence:
// 4 * (w_sq_limit - 1) * component, i.e. 4 gamma^2 * component for the
// alternating scheme.
double null_variance(const WeightScheme& scheme, double component);

}  // namespace fhsic
