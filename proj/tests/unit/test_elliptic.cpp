#include <gtest/gtest.h>

#include <cmath>

#include "trigonal/elliptic.hpp"
#include "trigonal/periods.hpp"

using namespace trigonal;

namespace {
std::vector<cplx> parameters() {
  std::vector<cplx> out;
  UniformStream rng(3);
  for (int i = 0; i < 10; ++i) out.emplace_back(rng.range(1e-3L, 0.3L), 0);
  for (int i = 0; i < 5; ++i) out.push_back(std::polar(rng.range(1e-2L, 0.3L), rng.range(-2.5L, 2.5L)));
  return out;
}
}  // namespace

TEST(Elliptic, InvariantsOverRandomParameters) {
  for (cplx s : parameters()) {
    const EllipticContext e(s);
    const cplx u = 0.23L * e.omega_p() + cplx(0.05L, 0.11L) * std::abs(e.omega_p());
    const cplx p = e.wp(u), pp = e.wp_prime(u);
    SCOPED_TRACE(testing::Message() << "s = " << static_cast<double>(s.real()) << "," << static_cast<double>(s.imag()));
    EXPECT_LT(std::abs(pp * pp - 4.0L * p * p * p - s * s) / std::abs(pp * pp), 1e-10L);
    EXPECT_LT(std::abs(e.eta_p() * e.omega_pp() - e.eta_pp() * e.omega_p() - kI * kPi / 2.0L), 1e-12L);
    EXPECT_LT(std::abs(e.y(e.omega_s()) - s) / std::abs(s), 1e-9L);
    EXPECT_LT(std::abs(e.al(0, u) * e.al(1, u) * e.al(2, u) / (e.y(u) - s) - 1.0L), 1e-9L);
    EXPECT_LT(kiepert_defects(e, u).consistent, 1e-9L);
    EXPECT_LT(addition_identity_defect(e, u, 0.4L * u * zeta3(1) + 0.1L * e.omega_p()), 1e-9L);
  }
}

TEST(Elliptic, QuadratureConfirmsClosedForm) {
  for (real s : {0.05L, 0.01L}) {
    EXPECT_LT(std::abs(omega_p_quadrature(s) / omega_p_closed(cplx(s)) - 1.0L), 1e-12L);
  }
}

TEST(Elliptic, ZetaTwistedDefinition) {
  const EllipticContext e(cplx(0.05L));
  const cplx u{0.3L, 0.2L};
  for (int l = 0; l < 3; ++l) {
    const cplx lhs = e.sigma(u + zeta3(l) * e.omega_s());
    const cplx rhs = zeta3(l) * e.sigma(zeta3(3 - l) * u + e.omega_s());
    EXPECT_LT(std::abs(lhs / rhs - 1.0L), 1e-10L);
  }
}

TEST(Elliptic, HalfLatticeRelations) {
  for (const auto& row : half_lattice_checks(EllipticContext(cplx(0.05L)))) {
    EXPECT_TRUE(row.pass()) << row.identity << " " << static_cast<double>(row.defect);
  }
}

TEST(Elliptic, SigmaTaylorSeventhCoefficient) {
  const cplx s{0.05L};
  EXPECT_LT(std::abs(kodaira_iv_expansion(EllipticContext(s)).sigma_c7 / (s * s / 840.0L) - 1.0L), 1e-6L);
}
