#pragma once

#include <cstddef>
#include <vector>

namespace fhsic {

// Shared abscissae for a set of discretized curves: strictly increasing,
// at least two points, all finite. Construction validates.
class Grid {
 public:
  explicit Grid(std::vector<double> points);

  // count points at j/(count-1), j = 0..count-1, covering [0, 1].
  static Grid equispaced(std::size_t count);

  const std::vector<double>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<double> points_;
};

// One discretized curve; values[j] is the sample at grid point j.
struct Curve {
  std::vector<double> values;
};

// A sample of n >= 2 curves on a common grid. All values finite and every
// curve matches the grid length; construction validates.
class CurveSet {
 public:
  CurveSet(Grid grid, std::vector<Curve> curves);

  const Grid& grid() const { return grid_; }
  const std::vector<Curve>& curves() const { return curves_; }
  const Curve& curve(std::size_t i) const { return curves_[i]; }
  std::size_t size() const { return curves_.size(); }
  std::size_t grid_size() const { return grid_.size(); }

 private:
  Grid grid_;
  std::vector<Curve> curves_;
};

}  // namespace fhsic
