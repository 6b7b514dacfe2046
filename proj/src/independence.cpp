#include "fhsic/independence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "fhsic/normal_dist.hpp"
#include "fhsic/rng.hpp"

namespace fhsic {

TestOutcome outcome_from_components(double statistic, double var_component,
                                    const WeightScheme& scheme, std::size_t n,
                                    double significance) {
  scheme.validate();
  if (!(significance > 0.0) || !(significance < 1.0)) {
    throw std::domain_error("independence test: significance must lie in (0, 1)");
  }
  if (n < 2) {
    throw std::invalid_argument("independence test: need sample size >= 2");
  }
  TestOutcome out;
  out.n = n;
  out.gamma = scheme.gamma;
  out.significance = significance;
  out.statistic = statistic;
  out.var_component = var_component;
  out.null_var = null_variance(scheme, var_component);
  if (out.null_var == 0.0) {
    out.degenerate = true;
    out.z = 0.0;
    out.p_value = 1.0;
    out.threshold = 0.0;
    out.reject = false;
    return out;
  }
  const double sd = std::sqrt(out.null_var);
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const double quantile = normal_quantile(1.0 - significance / 2.0);
  out.z = sqrt_n * statistic / sd;
  out.p_value = std::clamp(2.0 * (1.0 - normal_cdf(out.z)), 0.0, 1.0);
  out.threshold = sd * quantile / sqrt_n;
  out.reject = out.z > quantile;
  return out;
}

namespace {

GramMatrix zero_diagonal(const GramMatrix& gm) {
  GramMatrix out = gm;
  for (std::size_t i = 0; i < gm.size(); ++i) {
    out.at(i, i) = 0.0;
  }
  return out;
}

}  // namespace

TestOutcome independence_test(const GramMatrix& K, const GramMatrix& L,
                              const WeightScheme& scheme,
                              double significance) {
  // The decision statistic evaluates the weighted estimator on the
  // off-diagonal part of each Gram. Coincident pairs compare a sample with
  // itself, so for a kernel with unit diagonal they contribute a positive
  // (1/n)(1 - mean k)(1 - mean l) offset that carries no cross-sample
  // information and dwarfs the null scale sigma/sqrt(n) at practical n:
  // keeping them drives the rejection rate to 1 under independence. The
  // variance component is unaffected (a unit diagonal shifts every row mean
  // of the entrywise product by exactly 1/n) and is computed from the
  // original matrices.
  const HsicEstimate est =
      weighted_hsic(zero_diagonal(K), zero_diagonal(L),
                    weight_sequence(K.size(), scheme));
  const double component = row_mean_variance(K, L);
  return outcome_from_components(est.value, component, scheme, K.size(),
                                 significance);
}

namespace {

std::vector<std::size_t> random_permutation(std::size_t n, RngStream& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_u64() % (i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

}  // namespace

double permutation_test_naive(const GramMatrix& K, const GramMatrix& L,
                              int permutations, std::uint64_t seed) {
  if (K.size() != L.size() || K.size() < 2) {
    throw std::invalid_argument("permutation_test_naive: bad Gram sizes");
  }
  if (permutations < 1) {
    throw std::invalid_argument(
        "permutation_test_naive: need at least 1 permutation");
  }
  const std::size_t n = K.size();
  const double observed = naive_hsic(K, L).value;
  std::int64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(dynamic)
  for (std::int64_t b = 0; b < permutations; ++b) {
    RngStream rng(seed, static_cast<std::uint64_t>(b));
    const std::vector<std::size_t> perm = random_permutation(n, rng);
    GramMatrix permuted(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        permuted.at(i, j) = L(perm[i], perm[j]);
      }
    }
    if (naive_hsic(K, permuted).value >= observed) {
      ++count;
    }
  }
  return (1.0 + static_cast<double>(count)) /
         (static_cast<double>(permutations) + 1.0);
}

}  // namespace fhsic
