#include "fhsic/kernel.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fhsic {

void KernelSpec::validate() const {
  if (!(coefficient > 0.0) || !std::isfinite(coefficient)) {
    throw std::domain_error("KernelSpec: coefficient must be positive");
  }
}

double l2_squared_distance(const Curve& a, const Curve& b, const Grid& g) {
  const std::vector<double>& t = g.points();
  if (a.values.size() != t.size() || b.values.size() != t.size()) {
    throw std::invalid_argument(
        "l2_squared_distance: curve/grid length mismatch (" +
        std::to_string(a.values.size()) + ", " +
        std::to_string(b.values.size()) + " vs grid " +
        std::to_string(t.size()) + ")");
  }
  double prev = a.values[0] - b.values[0];
  prev *= prev;
  double sum = 0.0;
  for (std::size_t j = 1; j < t.size(); ++j) {
    double d = a.values[j] - b.values[j];
    d *= d;
    sum += 0.5 * (t[j] - t[j - 1]) * (prev + d);
    prev = d;
  }
  if (!std::isfinite(sum)) {
    throw std::domain_error(
        "l2_squared_distance: non-finite result (inputs must be finite)");
  }
  return sum;
}

double kernel_eval(const KernelSpec& spec, double squared_distance) {
  spec.validate();
  if (!(squared_distance >= 0.0)) {
    throw std::domain_error(
        "kernel_eval: squared distance must be nonnegative");
  }
  return std::exp(-spec.coefficient * squared_distance);
}

namespace {

// Shared by the parallel and serial builders so the two are bit-identical:
// every entry goes through the same scalar evaluation, only the loop
// scheduling differs.
void fill_row(GramMatrix& gm, const CurveSet& data, const KernelSpec& spec,
              std::size_t i) {
  const std::size_t n = data.size();
  gm.at(i, i) = kernel_eval(spec, 0.0);
  for (std::size_t j = i + 1; j < n; ++j) {
    const double v = kernel_eval(
        spec, l2_squared_distance(data.curve(i), data.curve(j), data.grid()));
    gm.at(i, j) = v;
    gm.at(j, i) = v;
  }
}

}  // namespace

GramMatrix gram_matrix(const CurveSet& data, const KernelSpec& spec) {
  spec.validate();
  const std::int64_t n = static_cast<std::int64_t>(data.size());
  GramMatrix gm(data.size());
  bool failed = false;
  std::string what;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      fill_row(gm, data, spec, static_cast<std::size_t>(i));
    } catch (const std::exception& e) {
#pragma omp critical
      {
        failed = true;
        what = e.what();
      }
    }
  }
  if (failed) {
    throw std::domain_error("gram_matrix: " + what);
  }
  return gm;
}

GramMatrix gram_matrix_serial(const CurveSet& data, const KernelSpec& spec) {
  spec.validate();
  GramMatrix gm(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    fill_row(gm, data, spec, i);
  }
  return gm;
}

}  // namespace fhsic
