#include "fhsic/hsic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace fhsic {

namespace {

void check_pair(const GramMatrix& K, const GramMatrix& L) {
  if (K.size() != L.size()) {
    throw std::invalid_argument("HSIC: Gram sizes differ (" +
                                std::to_string(K.size()) + " vs " +
                                std::to_string(L.size()) + ")");
  }
  if (K.size() < 2) {
    throw std::invalid_argument("HSIC: need sample size >= 2");
  }
}

}  // namespace

HsicEstimate naive_hsic(const GramMatrix& K, const GramMatrix& L) {
  check_pair(K, L);
  const std::size_t n = K.size();
  double t1 = 0.0, sk = 0.0, sl = 0.0, t3 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double rk = 0.0, rl = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double kij = K(i, j);
      const double lij = L(i, j);
      rk += kij;
      rl += lij;
      t1 += kij * lij;
    }
    sk += rk;
    sl += rl;
    t3 += rk * rl;
  }
  const double dn = static_cast<double>(n);
  const double value = t1 / (dn * dn) + (sk / (dn * dn)) * (sl / (dn * dn)) -
                       2.0 * (t3 / (dn * dn * dn));
  return HsicEstimate{value, n, std::nullopt};
}

HsicEstimate weighted_hsic(const GramMatrix& K, const GramMatrix& L,
                           std::span<const double> weights) {
  check_pair(K, L);
  const std::size_t n = K.size();
  if (weights.size() != n) {
    throw std::invalid_argument("weighted_hsic: " +
                                std::to_string(weights.size()) +
                                " weights for sample size " +
                                std::to_string(n));
  }
  for (double w : weights) {
    if (!(w > 0.0)) {
      throw std::domain_error("weighted_hsic: weights must be positive");
    }
  }
  double t1 = 0.0, sk = 0.0, sl = 0.0, t3 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double rk = 0.0, rl = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double kij = K(i, j);
      const double lij = L(i, j);
      rk += kij;
      rl += lij;
      t1 += kij * lij;
    }
    sk += rk;
    sl += rl;
    t3 += weights[i] * rk * rl;
  }
  const double dn = static_cast<double>(n);
  const double value = t1 / (dn * dn) + (sk / (dn * dn)) * (sl / (dn * dn)) -
                       2.0 * (t3 / (dn * dn * dn));
  return HsicEstimate{value, n, std::nullopt};
}

HsicEstimate weighted_hsic(const GramMatrix& K, const GramMatrix& L,
                           const WeightScheme& scheme) {
  const std::vector<double> w = weight_sequence(K.size(), scheme);
  HsicEstimate est = weighted_hsic(K, L, w);
  est.gamma = scheme.gamma;
  return est;
}

double row_mean_variance(const GramMatrix& K, const GramMatrix& L) {
  check_pair(K, L);
  const std::size_t n = K.size();
  const double dn = static_cast<double>(n);
  std::vector<double> row_sums(n);
  double grand = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      s += K(i, j) * L(i, j);
    }
    row_sums[i] = s;
    grand += s;
  }
  const double grand_mean = grand / (dn * dn);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dev = row_sums[i] / dn - grand_mean;
    acc += dev * dev;
  }
  return acc / dn;
}

double null_variance(const WeightScheme& scheme, double component) {
  scheme.validate();
  if (!(component >= 0.0)) {
    throw std::domain_error("null_variance: component must be nonnegative");
  }
  return 4.0 * (scheme.w_sq_limit() - 1.0) * component;
}

}  // namespace fhsic
