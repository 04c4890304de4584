#include <gtest/gtest.h>

#include <cmath>

#include "trigonal/degen.hpp"

using namespace trigonal;

TEST(Series, BinomialCoefficients) {
  const SeriesCoefficients c = c_series(10);
  EXPECT_NEAR(static_cast<double>(c.c1[0]), 1.0, 1e-18);
  EXPECT_NEAR(static_cast<double>(c.c1[1]), 1.0 / 3, 1e-18);
  EXPECT_NEAR(static_cast<double>(c.c2[2]), 5.0 / 9, 1e-18);
  EXPECT_LT(std::abs(c_series_sum(1, cplx(0.3L)) - std::pow(0.7L, -1.0L / 3)), 1e-15L);
}

TEST(Series, PartialSumsMatchDirectEvaluation) {
  const FamilyParams p{cplx(2, 1), cplx(3, 1), 0.1L};
  const SeriesCoefficients sc = h_series(p, 60);
  const cplx x{0.2L, 0.1L};
  for (int a = 1; a <= 2; ++a) {
    EXPECT_LT(std::abs(h_partial_sum(p, sc, a, x) / h_direct(p, a, x) - 1.0L), 1e-14L);
  }
}

TEST(RegularSingularSplit, SeriesMatchesQuadrature) {
  for (real s : {0.1L, 0.05L, 0.01L}) {
    const FamilyParams p{cplx(2, 1), cplx(3, 1), s};
    EXPECT_LT(std::abs(A1_series(p) / A1_quadrature(p) - 1.0L), 1e-10L);
  }
}

TEST(RegularSingularSplit, DifferenceOfRegularAndSingularParts) {
  const FamilyParams p{cplx(2, 1), cplx(3, 1), 0.05L};
  const RegularSingularPair r = I1_I2_quadrature(p);
  EXPECT_LT(std::abs((r.I2 - r.I1) / A1_series(p) - 1.0L), 1e-10L);
}

TEST(ScalingProbe, RecoversPowerLaw) {
  const std::vector<cplx> grid = default_s_grid();
  const DegenerationReport r = scaling_probe("power", grid, [](cplx s) {
    const cplx h = std::pow(s, 1.0L / 3);
    return std::pow(s, -1.0L / 3) * std::exp(0.4L * h - 0.2L * h * h);
  });
  EXPECT_NEAR(static_cast<double>(r.fitted_exponent), -1.0 / 3, 1e-9);
}

TEST(ScalingProbe, RejectsShortGrid) {
  EXPECT_THROW(scaling_probe("short", {cplx(0.1L), cplx(0.01L)}, [](cplx s) { return s; }), NumericError);
}

TEST(Extrapolation, CubeRootSeries) {
  const std::vector<cplx> grid = {cplx(1e-2L), cplx(1e-3L), cplx(1e-4L)};
  std::vector<cplx> values;
  for (cplx s : grid) values.push_back(2.0L + 0.5L * std::pow(s, 1.0L / 3) - std::pow(s, 2.0L / 3));
  EXPECT_LT(std::abs(extrapolate_cuberoot(grid, values) - 2.0L), 1e-12L);
}
