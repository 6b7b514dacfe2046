#pragma once

#include <cstddef>
#include <vector>

#include "fhsic/curve.hpp"

namespace fhsic {

enum class KernelFamily { gaussian_l2 };

// Gaussian kernel on L2([0,1]) curves:
//   k(x, y) = exp(-coefficient * ||x - y||^2)
// where the squared L2 distance is approximated by the trapezoidal rule on
// the curves' grid. The coefficient is the full multiplier of the squared
// distance inside the exponential. Values lie in [0, 1] with k(x, x) = 1,
// so the kernel is bounded.
struct KernelSpec {
  KernelFamily family = KernelFamily::gaussian_l2;
  double coefficient = 1.0 / 150.0;

  void validate() const;  // throws std::domain_error unless coefficient > 0
};

// Dense symmetric n x n matrix of pairwise kernel evaluations.
class GramMatrix {
 public:
  explicit GramMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {}

  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  double& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  // Sets (i, j) and (j, i); convenient for building matrices by hand.
  void set_sym(std::size_t i, std::size_t j, double v) {
    entries_[i * n_ + j] = v;
    entries_[j * n_ + i] = v;
  }

  std::size_t size() const { return n_; }
  const std::vector<double>& entries() const { return entries_; }

 private:
  std::size_t n_;
  std::vector<double> entries_;
};

// Trapezoidal approximation of the squared L2 distance
// integral of (a(t) - b(t))^2 dt over the grid's span. Symmetric in (a, b),
// zero iff the curves agree pointwise, exact for integrands of degree <= 1.
// Throws std::invalid_argument on a grid/curve length mismatch and
// std::domain_error if the result is not finite.
double l2_squared_distance(const Curve& a, const Curve& b, const Grid& g);

// exp(-coefficient * squared_distance). Throws std::domain_error for a
// negative (or NaN) squared distance.
double kernel_eval(const KernelSpec& spec, double squared_distance);

// Pairwise kernel matrix of a curve set with itself. Only the upper
// triangle is computed; the lower triangle is mirrored, so the result is
// exactly symmetric with a unit diagonal.
//
// gram_matrix parallelizes over rows with OpenMP and is bit-identical to
// gram_matrix_serial, the plain-loop reference kept for tests and the
// benchmark: both evaluate every entry through the same scalar routines.
GramMatrix gram_matrix(const CurveSet& data, const KernelSpec& spec);
GramMatrix gram_matrix_serial(const CurveSet& data, const KernelSpec& spec);

}  // namespace fhsic
