#include "fhsic/curve.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace fhsic {

Grid::Grid(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw std::invalid_argument("Grid: need at least 2 points, got " +
                                std::to_string(points_.size()));
  }
  for (std::size_t j = 0; j < points_.size(); ++j) {
    if (!std::isfinite(points_[j])) {
      throw std::domain_error("Grid: non-finite point at index " +
                              std::to_string(j));
    }
    if (j > 0 && !(points_[j] > points_[j - 1])) {
      throw std::invalid_argument(
          "Grid: points must be strictly increasing (violated at index " +
          std::to_string(j) + ")");
    }
  }
}

Grid Grid::equispaced(std::size_t count) {
  if (count < 2) {
    throw std::invalid_argument("Grid::equispaced: need at least 2 points");
  }
  std::vector<double> pts(count);
  const double denom = static_cast<double>(count - 1);
  for (std::size_t j = 0; j < count; ++j) {
    pts[j] = static_cast<double>(j) / denom;
  }
  return Grid(std::move(pts));
}

CurveSet::CurveSet(Grid grid, std::vector<Curve> curves)
    : grid_(std::move(grid)), curves_(std::move(curves)) {
  if (curves_.size() < 2) {
    throw std::invalid_argument("CurveSet: need at least 2 curves, got " +
                                std::to_string(curves_.size()));
  }
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    const Curve& c = curves_[i];
    if (c.values.size() != grid_.size()) {
      throw std::invalid_argument(
          "CurveSet: curve " + std::to_string(i) + " has " +
          std::to_string(c.values.size()) + " values, grid has " +
          std::to_string(grid_.size()));
    }
    for (double v : c.values) {
      if (!std::isfinite(v)) {
        throw std::domain_error("CurveSet: non-finite value in curve " +
                                std::to_string(i));
      }
    }
  }
}

}  // namespace fhsic
