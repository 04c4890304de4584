#include <gtest/gtest.h>

#include "trigonal/curves.hpp"

using namespace trigonal;

TEST(FamilyParams, RejectsCoincidentBranchPoints) {
  FamilyParams p{2, 2, 0.1L};
  try {
    p.validate();
    FAIL();
  } catch (const NumericError& e) {
    EXPECT_EQ(std::string(e.what()), "coincident branch points");
  }
  EXPECT_THROW((FamilyParams{2, 3, 2}.validate()), NumericError);
  EXPECT_NO_THROW((FamilyParams{2, 3, 0}.validate()));
}

TEST(CurveModel, GenusFollowsS) {
  EXPECT_EQ(CurveModel::for_params({2, 3, 0.1L}).genus(), 3);
  EXPECT_EQ(CurveModel::for_params({2, 3, 0}).genus(), 2);
}

TEST(CurveModel, ContinuationStaysOnTheCurve) {
  const CurveModel m = CurveModel::genus3({cplx(2, 0.3L), cplx(3, -0.2L), cplx(0.1L, 0.05L)});
  const cplx xa{5, 5};
  const cplx ya = std::pow(m.y_cubed(xa), 1.0L / 3);
  const cplx x{4, -3};
  const cplx y = m.continue_y(xa, ya, x);
  EXPECT_LT(std::abs(y * y * y - m.y_cubed(x)) / std::abs(m.y_cubed(x)), 1e-15L);
}

TEST(CurveIntegrator, AbelImageOfBasePointIsBaseValue) {
  const CurveIntegrator integ(CurveModel::for_params({2, 3, 0.1L}), {}, {});
  EXPECT_TRUE(integ.legs_in_canonical_order());
  const auto img = integ.abel(integ.base_x(), 0);
  EXPECT_LT(max_abs(CVec(img.value - integ.base_value())), 1e-16L);
}

TEST(CurveIntegrator, SheetRotationActsDiagonally) {
  const CurveIntegrator integ(CurveModel::for_params({2, 3, 0.1L}), {}, {});
  const cplx x{1.0L, 0.8L};
  const CVec v0 = integ.abel(x, 0).value, v1 = integ.abel(x, 1).value;
  // Both images start at the base point on their own sheets, so the rotation
  // acts on the integral itself.
  const CVec& act = integ.model().action();
  EXPECT_LT(max_abs(CVec(v1 - act.cwiseProduct(v0))), 1e-15L);
}
