#include <gtest/gtest.h>

#include "trigonal/periods.hpp"

using namespace trigonal;

namespace {
const PeriodData& g3() {
  static const PeriodData pd = compute_periods(FamilyParams{cplx(2, 0.3L), cplx(3, -0.2L), cplx(0.1L, 0.05L)});
  return pd;
}
const PeriodData& g2() {
  static const PeriodData pd = compute_periods(FamilyParams{cplx(2, 0.3L), cplx(3, -0.2L), 0});
  return pd;
}
}  // namespace

TEST(Periods, LegendreRelationBothGenera) {
  EXPECT_LT(g3().diag.legendre_defect, 1e-12L);
  EXPECT_LT(g2().diag.legendre_defect, 1e-12L);
}

TEST(Periods, TauSymmetricWithPositiveImaginaryPart) {
  for (const PeriodData* pd : {&g3(), &g2()}) {
    EXPECT_LT(pd->diag.tau_symmetry_defect, 1e-14L);
    EXPECT_GT(pd->diag.im_tau_min_eig, 0);
  }
}

TEST(Periods, CharacteristicsMatchKnownValues) {
  RVec a3(3), b3(3), a2(2), b2(2);
  a3 << 0, 0, 0.5L;
  b3 << 0, 0.5L, 0.5L;
  a2 << 0, 0;
  b2 << 0, 0.5L;
  EXPECT_TRUE((g3().delta == ThetaCharacteristic{a3, b3}));
  EXPECT_TRUE((g2().delta == ThetaCharacteristic{a2, b2}));
}

TEST(Periods, LatticePointsDecompose) {
  IVec l1(3), l2(3);
  l1 << 1, -2, 0;
  l2 << 0, 3, -1;
  const LatticeVector lv = lattice_decompose(g3(), g3().lattice_point(l1, l2), 1);
  EXPECT_EQ(lv.l1, l1);
  EXPECT_EQ(lv.l2, l2);
  EXPECT_LT(lv.residual, 1e-12L);
}

TEST(Periods, NonLatticeVectorIsRejected) {
  CVec v = 0.37L * g3().omega_p.col(0);
  try {
    lattice_decompose(g3(), v, 1);
    FAIL();
  } catch (const NumericError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInLattice);
  }
}

TEST(Periods, ConjugatePeriodsFromPrimaryOnes) {
  EXPECT_LT(check_conjugate_periods(g3()).consistent, 1e-12L);
  EXPECT_LT(check_conjugate_periods(g2()).consistent, 1e-12L);
}

TEST(Periods, SamplingIsDeterministic) {
  const CurveIntegrator integ(CurveModel::for_params(g3().params), {}, {});
  UniformStream r1(11), r2(11);
  for (int i = 0; i < 5; ++i) {
    const SamplePoint a = sample_point(integ, r1), b = sample_point(integ, r2);
    EXPECT_EQ(a.x, b.x);
    EXPECT_EQ(a.sheet, b.sheet);
  }
}

TEST(Periods, DetourToSecondQuadrantS) {
  // The arc to s must not sweep across the leg to 0.
  for (cplx s : {cplx(-0.003L, 0.0075L), cplx(-0.2L, 0.1L), cplx(-0.05L, -0.01L)}) {
    const PeriodData pd = compute_periods(FamilyParams{cplx(2, 0.3L), cplx(3, -0.2L), s});
    EXPECT_LT(pd.diag.legendre_defect, 1e-12L);
  }
}
