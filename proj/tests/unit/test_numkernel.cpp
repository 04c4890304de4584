#include <gtest/gtest.h>

#include <cmath>

#include "trigonal/numkernel.hpp"

using namespace trigonal;

TEST(GaussRule, IntegratesPolynomialsExactly) {
  const GaussRule& r = gauss_rule(8);
  for (int k = 0; k < 16; ++k) {
    real sum = 0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) sum += r.weights[i] * std::pow(r.nodes[i], k);
    const real exact = k % 2 ? 0 : 2.0L / (k + 1);
    EXPECT_NEAR(static_cast<double>(sum), static_cast<double>(exact), 1e-17);
  }
}

TEST(Quadrature, SegmentOfEntireFunction) {
  const cplx a{0, 0}, b{1, 1};
  const cplx got = integrate_segment([](cplx z) { return std::exp(z); }, a, b, {});
  EXPECT_LT(std::abs(got - (std::exp(b) - std::exp(a))), 1e-17L);
}

TEST(Quadrature, AdaptsToOscillation) {
  const CVec got = integrate_param(
      [](real t) {
        CVec v(2);
        v << std::cos(40 * t), cplx(0, std::exp(-t * t));
        return v;
      },
      0, 3, 2, {});
  EXPECT_LT(std::abs(got[0] - std::sin(120.0L) / 40), 1e-16L);
  EXPECT_LT(std::abs(got[1].imag() - std::sqrt(kPi) / 2 * std::erf(3.0L)), 1e-16L);
}

TEST(Quadrature, RejectsBadConfig) {
  QuadratureConfig cfg;
  cfg.panel_order = 0;
  EXPECT_THROW(cfg.validate(), NumericError);
}

TEST(Series, GeometricSumAndDivergence) {
  const cplx sum = sum_series([](int n) { return std::pow(cplx(0.5L), static_cast<real>(n)); }, 1e-18L, 200);
  EXPECT_LT(std::abs(sum - 2.0L), 1e-17L);
  try {
    sum_series([](int n) { return cplx(std::pow(1.5L, static_cast<real>(n))); }, 1e-18L, 200);
    FAIL() << "divergent series summed";
  } catch (const NumericError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonConvergence);
  }
}

TEST(LinearAlgebra, InverseAndDeterminant) {
  CMat m(3, 3);
  m << cplx(2, 1), 1, 0, 0, cplx(3, -1), 1, 1, 0, 4;
  EXPECT_LT(max_abs(m * mat_inverse(m) - CMat::Identity(3, 3)), 1e-17L);
  EXPECT_LT(std::abs(small_det(m) - m.determinant()), 1e-16L);
}

TEST(GammaFunction, ReflectionAndRealAxis) {
  EXPECT_LT(std::abs(gamma_fn(cplx(1.0L / 3)) - std::tgamma(1.0L / 3)), 1e-17L);
  const cplx z{0.3L, 0.7L};
  EXPECT_LT(std::abs(gamma_fn(z) * gamma_fn(1.0L - z) - kPi / std::sin(kPi * z)), 1e-13L);
}

TEST(CubeRoots, Zeta3Cycle) {
  EXPECT_LT(std::abs(std::pow(zeta3(1), 3) - 1.0L), 1e-18L);
  EXPECT_LT(std::abs(zeta3(1) * zeta3(2) - 1.0L), 1e-18L);
}
