#include <doctest.h>

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <vector>

#include "fhsic/kernel.hpp"
#include "fhsic/rng.hpp"
#include "oracles.hpp"

using namespace fhsic;
using fhsic::testing::random_curve_set;

TEST_CASE("trapezoidal squared distance matches hand-computed values") {
  const Grid g({0.0, 0.5, 1.0});
  const Curve zero{{0.0, 0.0, 0.0}};
  const Curve one{{1.0, 1.0, 1.0}};
  const Curve ramp{{0.0, 1.0, 2.0}};

  CHECK(l2_squared_distance(ramp, ramp, g) == 0.0);
  CHECK(l2_squared_distance(zero, one, g) == doctest::Approx(1.0).epsilon(1e-15));
  // 0.5 * (0/2 + 1 + 4/2)
  CHECK(l2_squared_distance(ramp, zero, g) ==
        doctest::Approx(1.5).epsilon(1e-15));
  CHECK(l2_squared_distance(ramp, zero, g) ==
        l2_squared_distance(zero, ramp, g));
}

TEST_CASE("trapezoid is exact for integrands of degree <= 1 on any grid") {
  // (a - b)^2 = 0.3 t + 0.2 pointwise on a non-equispaced grid.
  const Grid g({0.0, 0.13, 0.4, 0.75, 1.0});
  Curve a, zero;
  for (double t : g.points()) {
    a.values.push_back(std::sqrt(0.3 * t + 0.2));
    zero.values.push_back(0.0);
  }
  const double exact = 0.3 / 2.0 + 0.2;  // integral over [0, 1]
  CHECK(l2_squared_distance(a, zero, g) ==
        doctest::Approx(exact).epsilon(1e-14));
}

TEST_CASE("trapezoid error drops ~4x when the step halves") {
  // Generic smooth integrand: curve t^4 vs 0, so the integrand is t^8.
  const double exact = 1.0 / 9.0;
  auto error_at = [&](std::size_t points) {
    const Grid g = Grid::equispaced(points);
    Curve c, zero;
    for (double t : g.points()) {
      c.values.push_back(t * t * t * t);
      zero.values.push_back(0.0);
    }
    return std::abs(l2_squared_distance(c, zero, g) - exact);
  };
  const double e26 = error_at(26);
  const double e51 = error_at(51);
  const double e101 = error_at(101);
  CHECK(e26 / e51 == doctest::Approx(4.0).epsilon(0.15));
  CHECK(e51 / e101 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("distance errors: length mismatch and non-finite input") {
  const Grid g = Grid::equispaced(3);
  Curve short_curve{{1.0, 2.0}};
  Curve fine{{0.0, 0.0, 0.0}};
  Curve nan_curve{{0.0, std::nan(""), 0.0}};
  CHECK_THROWS_AS(l2_squared_distance(short_curve, fine, g),
                  std::invalid_argument);
  CHECK_THROWS_AS(l2_squared_distance(nan_curve, fine, g), std::domain_error);
}

TEST_CASE("kernel evaluation") {
  KernelSpec spec;
  spec.coefficient = 1.0 / 150.0;
  CHECK(kernel_eval(spec, 0.0) == 1.0);
  CHECK(kernel_eval(spec, 1.0) ==
        doctest::Approx(0.99335546).epsilon(1e-7));
  CHECK(kernel_eval(spec, 150.0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(kernel_eval(spec, -0.5), std::domain_error);

  KernelSpec bad;
  bad.coefficient = 0.0;
  CHECK_THROWS_AS(kernel_eval(bad, 1.0), std::domain_error);
}

TEST_CASE("gram matrix of identical curves is all ones") {
  const Grid g = Grid::equispaced(4);
  Curve c{{0.5, -1.0, 2.0, 0.0}};
  const CurveSet data(g, {c, c, c});
  const GramMatrix gm = gram_matrix_serial(data, KernelSpec{});
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(gm(i, j) == 1.0);
    }
  }
}

TEST_CASE("two-curve gram composes distance and kernel") {
  const Grid g({0.0, 0.5, 1.0});
  const CurveSet data(g, {Curve{{0.0, 1.0, 2.0}}, Curve{{0.0, 0.0, 0.0}}});
  KernelSpec spec;
  spec.coefficient = 1.0 / 150.0;
  const GramMatrix gm = gram_matrix_serial(data, spec);
  CHECK(gm(0, 0) == 1.0);
  CHECK(gm(1, 1) == 1.0);
  CHECK(gm(0, 1) == doctest::Approx(std::exp(-1.5 / 150.0)).epsilon(1e-15));
  CHECK(gm(0, 1) == gm(1, 0));
}

TEST_CASE("gram invariants on random data: symmetry, diagonal, bounds") {
  RngStream rng(7, 0);
  const CurveSet data = random_curve_set(25, 11, rng);
  KernelSpec spec;
  spec.coefficient = 0.8;
  const GramMatrix gm = gram_matrix_serial(data, spec);
  for (std::size_t i = 0; i < gm.size(); ++i) {
    CHECK(gm(i, i) == 1.0);
    for (std::size_t j = 0; j < gm.size(); ++j) {
      CHECK(gm(i, j) == gm(j, i));  // exact: computed once, mirrored
      CHECK(gm(i, j) > 0.0);
      CHECK(gm(i, j) <= 1.0);
    }
  }
}

TEST_CASE("parallel gram is bit-identical to the serial reference") {
  RngStream rng(11, 3);
  const CurveSet data = random_curve_set(40, 13, rng);
  KernelSpec spec;
  spec.coefficient = 0.37;
  const GramMatrix a = gram_matrix(data, spec);
  const GramMatrix b = gram_matrix_serial(data, spec);
  REQUIRE(a.size() == b.size());
  CHECK(std::memcmp(a.entries().data(), b.entries().data(),
                    a.entries().size() * sizeof(double)) == 0);
}

TEST_CASE("reordering curves permutes gram rows and columns") {
  RngStream rng(5, 1);
  const CurveSet data = random_curve_set(8, 9, rng);
  const std::vector<std::size_t> perm = {3, 1, 7, 0, 5, 2, 6, 4};
  std::vector<Curve> reordered;
  for (std::size_t idx : perm) {
    reordered.push_back(data.curve(idx));
  }
  const CurveSet shuffled(Grid::equispaced(9), std::move(reordered));
  KernelSpec spec;
  spec.coefficient = 0.5;
  const GramMatrix base = gram_matrix_serial(data, spec);
  const GramMatrix moved = gram_matrix_serial(shuffled, spec);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = 0; j < perm.size(); ++j) {
      CHECK(moved(i, j) == base(perm[i], perm[j]));
    }
  }
}
