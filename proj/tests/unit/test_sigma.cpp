#include <gtest/gtest.h>

#include "trigonal/sigma.hpp"

using namespace trigonal;

namespace {
const SigmaContext& ctx3() {
  static const SigmaContext c(compute_periods(FamilyParams{2, 3, 0.1L}));
  return c;
}
}  // namespace

TEST(Sigma, TranslationLaw) {
  CVec u(3);
  u << cplx(0.1L, 0.2L), cplx(-0.3L, 0.1L), cplx(0.2L, -0.1L);
  IVec l1(3), l2(3);
  l1 << 1, 0, -1;
  l2 << 0, 1, 1;
  const CVec ell = ctx3().periods().lattice_point(l1, l2);
  const cplx lhs = ctx3()(CVec(u + ell));
  const cplx rhs = ctx3()(u) * translation_factor(ctx3(), u, l1, l2);
  EXPECT_LT(std::abs(lhs / rhs - 1.0L), 1e-10L);
}

TEST(Sigma, ConstantAgreesWithClosedForm) {
  const ConstantComparison cc = compare_constant(ctx3(), false);
  EXPECT_LT(std::abs(cc.modulus_defect), 1e-10L);
  EXPECT_LT(cc.phase_residual, 1e-10L);
}

TEST(Sigma, JetGradientMatchesFiniteDifferences) {
  CVec u(3);
  u << cplx(0.1L, 0.1L), cplx(0.2L, -0.1L), cplx(-0.1L, 0.3L);
  const SigmaJet j = ctx3().jet(u, 1);
  const real h = 1e-5L;
  for (int i = 0; i < 3; ++i) {
    CVec e = CVec::Zero(3);
    e[i] = h;
    const cplx fd = (ctx3()(CVec(u + e)) - ctx3()(CVec(u - e))) / (2 * h);
    EXPECT_LT(std::abs(fd - j.grad[i]) / std::max(std::abs(j.grad[i]), static_cast<real>(1e-3L)), 1e-7L);
  }
}

TEST(Sigma, SchurPolynomials) {
  const cplx a{0.3L, 0.1L}, b{-0.2L, 0.4L}, c{0.1L, -0.5L};
  CVec u(3);
  u << (std::pow(a, 5) + std::pow(b, 5) + std::pow(c, 5)) / 5.0L, (a * a + b * b + c * c) / 2.0L, a + b + c;
  const cplx expect = a * b * c * (a * a + b * b + c * c + a * b + b * c + c * a);
  EXPECT_LT(std::abs(schur_311(u) - expect), 1e-17L);
  CVec v(2);
  v << (a * a + b * b) / 2.0L, a + b;
  EXPECT_LT(std::abs(schur_11(v) - a * b), 1e-18L);
}

TEST(Sigma, TranslationSignIsPlusMinusOne) {
  const auto& delta = ctx3().periods().delta;
  IVec l1(3), l2(3);
  for (int k = 0; k < 8; ++k) {
    l1 << (k & 1), ((k >> 1) & 1), ((k >> 2) & 1);
    l2 << 1, (k & 1), 0;
    const int sgn = translation_sign(delta, l1, l2);
    EXPECT_TRUE(sgn == 1 || sgn == -1);
  }
}

TEST(Sigma, GenusTwoContext) {
  const SigmaContext c2(compute_periods(FamilyParams{2, 3, 0}));
  EXPECT_EQ(c2.genus(), 2);
  CVec u(2);
  u << cplx(0.1L, 0.2L), cplx(-0.3L, 0.1L);
  const real sign = c2.periods().delta.parity() ? -1 : 1;
  EXPECT_LT(std::abs(c2(CVec(-u)) - sign * c2(u)), 1e-12L * std::abs(c2(u)));
}
