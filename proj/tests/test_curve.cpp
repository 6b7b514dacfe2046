#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "fhsic/curve.hpp"

using namespace fhsic;

TEST_CASE("grid validates its points") {
  CHECK_THROWS_AS(Grid({0.5}), std::invalid_argument);
  CHECK_THROWS_AS(Grid({0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(Grid({0.0, 0.6, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(Grid({0.0, std::numeric_limits<double>::quiet_NaN()}),
                  std::domain_error);
  CHECK_NOTHROW(Grid({0.0, 0.25, 0.9}));
}

TEST_CASE("equispaced grid covers [0, 1] with the usual abscissae") {
  const Grid g = Grid::equispaced(51);
  REQUIRE(g.size() == 51);
  CHECK(g.points().front() == 0.0);
  CHECK(g.points().back() == 1.0);
  for (std::size_t j = 0; j < 51; ++j) {
    CHECK(g.points()[j] == static_cast<double>(j) / 50.0);
  }
}

TEST_CASE("curve set validates sizes and values") {
  const Grid g = Grid::equispaced(3);
  Curve ok{{1.0, 2.0, 3.0}};
  Curve short_curve{{1.0, 2.0}};
  Curve bad{{1.0, std::numeric_limits<double>::infinity(), 3.0}};

  CHECK_THROWS_AS(CurveSet(g, {ok}), std::invalid_argument);
  CHECK_THROWS_AS(CurveSet(g, {ok, short_curve}), std::invalid_argument);
  CHECK_THROWS_AS(CurveSet(g, {ok, bad}), std::domain_error);

  const CurveSet cs(g, {ok, ok});
  CHECK(cs.size() == 2);
  CHECK(cs.grid_size() == 3);
}
