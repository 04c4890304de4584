#include <gtest/gtest.h>

#include "trigonal/theta.hpp"

using namespace trigonal;

namespace {
CMat sample_tau() {
  CMat t(2, 2);
  t << cplx(0.1L, 1.2L), cplx(0.3L, 0.2L), cplx(0.3L, 0.2L), cplx(-0.2L, 0.9L);
  return t;
}
}  // namespace

TEST(Characteristics, CountAndParity) {
  const auto all = all_half_characteristics(3);
  ASSERT_EQ(all.size(), 64u);
  int odd = 0;
  for (const auto& ch : all) odd += ch.parity();
  EXPECT_EQ(odd, 28);
}

TEST(Theta, MatchesBoxSum) {
  const CMat tau = sample_tau();
  CVec z(2);
  z << cplx(0.2L, -0.1L), cplx(-0.3L, 0.05L);
  for (const auto& ch : all_half_characteristics(2)) {
    const cplx v = theta(z, ThetaParams{tau, ch, 1e-16L});
    EXPECT_LT(std::abs(v - theta_box_sum(z, tau, ch, 12)), 1e-15L);
  }
}

TEST(Theta, QuasiPeriodicity) {
  const CMat tau = sample_tau();
  CVec z(2);
  z << cplx(0.1L, 0.2L), cplx(0.4L, -0.1L);
  IVec m(2), n(2);
  m << 1, -1;
  n << 2, 1;
  for (const auto& ch : all_half_characteristics(2))
    EXPECT_LT(quasi_periodicity_defect(z, ThetaParams{tau, ch, 1e-15L}, m, n), 1e-12L);
}

TEST(Theta, JetMatchesFiniteDifferences) {
  const ThetaFunction th(ThetaParams{sample_tau(), all_half_characteristics(2)[5], 1e-16L});
  CVec z(2);
  z << cplx(0.1L, 0.1L), cplx(-0.2L, 0.05L);
  const auto jet = th.jet(z, 2);
  const real h = 1e-5L;
  for (int i = 0; i < 2; ++i) {
    CVec e = CVec::Zero(2);
    e[i] = h;
    const cplx fd = (th.value(CVec(z + e)) - th.value(CVec(z - e))) / (2 * h);
    EXPECT_LT(std::abs(fd - jet.grad[i]), 1e-8L);
  }
}

TEST(Theta, RejectsNonPositiveImaginaryPart) {
  CMat tau = sample_tau();
  tau(1, 1) = cplx(0, -1);
  EXPECT_THROW(ThetaFunction(ThetaParams{tau, ThetaCharacteristic::zero(2), 1e-12L}), NumericError);
}
