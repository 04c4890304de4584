#pragma once

#include <array>

#include "trigonal/checks.hpp"
#include "trigonal/theta.hpp"

namespace trigonal {

// The curve y (y - s) = x^3, i.e. (p')^2 = 4 p^3 + s^2 with p' = 2y - s.
// Periods come from the closed form, checked against quadrature at
// construction; sigma and p come from the genus-one theta with [1/2; 1/2].
class EllipticContext {
 public:
  explicit EllipticContext(cplx s, real theta_tol = 1e-15L);

  cplx s() const { return s_; }
  cplx g3() const { return -s_ * s_; }
  cplx omega_p() const { return omega_p_; }
  cplx omega_pp() const { return omega_pp_; }
  cplx eta_p() const { return eta_p_; }
  cplx eta_pp() const { return eta_pp_; }
  cplx omega_s() const { return omega_s_; }
  cplx omega_0() const { return omega_0_; }
  const std::array<cplx, 3>& e() const { return e_; }

  cplx sigma(cplx u) const;
  // d/du log sigma
  cplx zeta(cplx u) const;
  cplx wp(cplx u) const;
  cplx wp_prime(cplx u) const;
  // y(u) = (p'(u) + s) / 2
  cplx y(cplx u) const;
  cplx al(int r, cplx u) const;
  cplx phi(int r) const;

 private:
  // Derivatives of log theta(u / (2 omega')) in u, orders 0..3.
  std::array<cplx, 4> log_theta_jet(cplx u) const;

  cplx s_;
  cplx omega_p_, omega_pp_, eta_p_, eta_pp_, omega_s_, omega_0_;
  std::array<cplx, 3> e_;
  ThetaFunction theta_;
  cplx theta_prime0_;
};

EllipticContext make_elliptic_context(cplx s);

// Closed form of omega' as displayed, and the value it should have.
cplx omega_p_printed(cplx s);
cplx omega_p_closed(cplx s);
// Integral of dx / (i sqrt(-(4 x^3 + s^2))) over (-infinity, e1], real s > 0.
cplx omega_p_quadrature(real s, const QuadratureConfig& cfg = {});

real addition_identity_defect(const EllipticContext& ctx, cplx u, cplx v);
real translation_defect(const EllipticContext& ctx, cplx u, long n, long m);

// sigma(omega_s) and the displayed closed form of its modulus.
struct SigmaAtOmegaS {
  cplx value;
  real printed_modulus = 0;
  real true_modulus = 0;  // e^{sqrt3 pi / 9} / |s|^{1/3}
};
SigmaAtOmegaS sigma_at_omega_s(const EllipticContext& ctx);

// sigma(3u) / sigma(u)^9 against 3 p (p^3 + c s^2) for the displayed c = -12
// and for c = 1.
struct KiepertDefects {
  real printed = 0;
  real consistent = 0;
};
KiepertDefects kiepert_defects(const EllipticContext& ctx, cplx u);

// Taylor coefficients of g(u) around 0 by a discrete Cauchy integral.
std::vector<cplx> taylor_coefficients(const std::function<cplx(cplx)>& g, real radius, int count,
                                      int samples = 128);

struct KodairaExpansion {
  cplx linear;      // d/du log sigma at omega_s
  cplx linear_printed;
  cplx eta0;        // eta' / s^{1/3}
  cplx eta0_printed;
  cplx c3, c6;      // coefficients of u^3 and u^6 after dividing out sigma(omega_s) e^{linear u}
  cplx c1, c2, c4, c5;  // should vanish
  cplx sigma_c7;    // u^7 coefficient of sigma itself
};
KodairaExpansion kodaira_iv_expansion(const EllipticContext& ctx);

struct OmegaSCubeDefects {
  real literal = 0;  // exponent 2 (2 + zeta) eta' (u + omega_s) + pi sqrt3
  real proof = 0;    // exponent 2 (2 + zeta^2) eta' (u + omega_s) + 6 eta' omega'
  real consistent = 0;  // exponent 2 (2 + zeta^2) eta' u
};
OmegaSCubeDefects omega_s_cube_defects(const EllipticContext& ctx, cplx u);

// Half-lattice relations: p(zeta^r omega_s) = 0, y(omega_s) = s,
// y(omega_0) = 0, zeta omega_s = omega_s - 2 omega', omega_s / omega'.
CheckList half_lattice_checks(const EllipticContext& ctx);

}  // namespace trigonal
