#include "trigonal/elliptic.hpp"

#include <cmath>

namespace trigonal {

namespace {

const real kSqrt3 = std::sqrt(3.0L);

ThetaParams genus_one(cplx tau, real tol) {
  ThetaParams p;
  p.tau = CMat::Constant(1, 1, tau);
  p.ch = ThetaCharacteristic{RVec::Constant(1, 0.5L), RVec::Constant(1, 0.5L)};
  p.tol = tol;
  return p;
}

CVec one(cplx z) { return CVec::Constant(1, z); }

real rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), static_cast<real>(1e-300L)); }

}  // namespace

cplx omega_p_printed(cplx s) {
  const cplx z = zeta3(1), z2 = zeta3(2);
  return 1.5L / (z - z2) * std::pow(std::tgamma(1.0L / 3), 2) /
         (std::pow(s, 1.0L / 3) * std::tgamma(2.0L / 3));
}

cplx omega_p_closed(cplx s) {
  return std::pow(std::tgamma(1.0L / 3), 2) / (2.0L * kI * kSqrt3 * std::tgamma(2.0L / 3)) *
         std::pow(s, -1.0L / 3);
}

cplx omega_p_quadrature(real s, const QuadratureConfig& cfg) {
  if (!(s > 0)) throw NumericError(ErrorCode::InvalidParam, "quadrature oracle needs real s > 0");
  const real e1 = -std::cbrt(s * s / 4);
  // x = e1 - v^2 on [0, 1], then x = e1 - v^-2.
  auto near = [&](real v) {
    const real x = e1 - v * v;
    CVec r(1);
    r[0] = 2.0L * v / (kI * std::sqrt(-(4 * x * x * x + s * s)));
    if (v == 0) r[0] = 2.0L / (kI * std::sqrt(12 * e1 * e1));
    return r;
  };
  auto far = [&](real v) {
    const real q = e1 * v * v - 1;
    CVec r(1);
    r[0] = 2.0L / (kI * std::sqrt(-4 * q * q * q - s * s * std::pow(v, 6)));
    return r;
  };
  return integrate_param(near, 0.0L, 1.0L, 1, cfg)[0] + integrate_param(far, 0.0L, 1.0L, 1, cfg)[0];
}

EllipticContext::EllipticContext(cplx s, real theta_tol)
    : s_(s), theta_(genus_one(zeta3(1), theta_tol)) {
  if (s == cplx(0)) throw NumericError(ErrorCode::InvalidParam, "s must be nonzero");
  omega_p_ = omega_p_closed(s);
  omega_pp_ = zeta3(1) * omega_p_;
  const ThetaFunction::Jet j = theta_.jet(one(0), 3);
  theta_prime0_ = j.grad[0];
  eta_p_ = -j.third[0](0, 0) / (12.0L * omega_p_ * theta_prime0_);
  eta_pp_ = zeta3(2) * eta_p_;
  const cplx e1 = -std::pow(s * s / 4.0L, 1.0L / 3);
  e_ = {e1, zeta3(1) * e1, zeta3(2) * e1};
  omega_0_ = (1.0L - zeta3(1)) / 3.0L * 2.0L * omega_p_;
  // Of the two candidates +-(2/3)(2 omega' + omega''), keep the one with y = s.
  const cplx cand = (2.0L / 3.0L) * (2.0L * omega_p_ + omega_pp_);
  omega_s_ = std::abs(y(cand) - s) < std::abs(y(-cand) - s) ? cand : -cand;
}

EllipticContext make_elliptic_context(cplx s) { return EllipticContext(s); }

std::array<cplx, 4> EllipticContext::log_theta_jet(cplx u) const {
  const cplx scale = 1.0L / (2.0L * omega_p_);
  const ThetaFunction::Jet j = theta_.jet(one(u * scale), 3);
  const cplx t0 = j.value, t1 = j.grad[0], t2 = j.hess(0, 0), t3 = j.third[0](0, 0);
  if (std::abs(t0) == 0) throw NumericError(ErrorCode::OnLattice, "argument is a lattice point");
  const cplx l1 = t1 / t0;
  const cplx l2 = t2 / t0 - l1 * l1;
  const cplx l3 = t3 / t0 - 3.0L * t1 * t2 / (t0 * t0) + 2.0L * l1 * l1 * l1;
  return {std::log(t0), l1 * scale, l2 * scale * scale, l3 * scale * scale * scale};
}

cplx EllipticContext::sigma(cplx u) const {
  const cplx th = theta_.value(one(u / (2.0L * omega_p_)));
  return 2.0L * omega_p_ * std::exp(eta_p_ * u * u / (2.0L * omega_p_)) * th / theta_prime0_;
}

cplx EllipticContext::zeta(cplx u) const { return eta_p_ * u / omega_p_ + log_theta_jet(u)[1]; }

cplx EllipticContext::wp(cplx u) const { return -(eta_p_ / omega_p_ + log_theta_jet(u)[2]); }

cplx EllipticContext::wp_prime(cplx u) const { return -log_theta_jet(u)[3]; }

cplx EllipticContext::y(cplx u) const { return (wp_prime(u) + s_) / 2.0L; }

cplx EllipticContext::phi(int r) const {
  switch (((r % 3) + 3) % 3) {
    case 0: return -(2.0L / 3.0L) * (2.0L * eta_p_ + eta_pp_);
    case 1: return (2.0L / 3.0L) * (eta_p_ + 2.0L * eta_pp_);
    default: return (2.0L / 3.0L) * (eta_p_ - eta_pp_);
  }
}

cplx EllipticContext::al(int r, cplx u) const {
  const cplx den = sigma(u);
  if (std::abs(den) == 0) throw NumericError(ErrorCode::OnLattice, "argument is a lattice point");
  return std::exp(-phi(r) * u) * sigma(u - zeta3(-r) * omega_s_) / (den * sigma(omega_s_));
}

real addition_identity_defect(const EllipticContext& ctx, cplx u, cplx v) {
  const cplx z = zeta3(1);
  const cplx lhs = ctx.sigma(u - v) * ctx.sigma(u - z * v) * ctx.sigma(u - z * z * v) /
                   (std::pow(ctx.sigma(u), 3) * std::pow(ctx.sigma(v), 3));
  return rel(lhs, ctx.y(u) - ctx.y(v));
}

real translation_defect(const EllipticContext& ctx, cplx u, long n, long m) {
  const real nr = static_cast<real>(n), mr = static_cast<real>(m);
  const cplx shift = 2.0L * nr * ctx.omega_p() + 2.0L * mr * ctx.omega_pp();
  const real sign = ((n + m + n * m) % 2 == 0) ? 1 : -1;
  const cplx factor = sign * std::exp((2.0L * nr * ctx.eta_p() + 2.0L * mr * ctx.eta_pp()) *
                                      (u + nr * ctx.omega_p() + mr * ctx.omega_pp()));
  return rel(ctx.sigma(u + shift), factor * ctx.sigma(u));
}

SigmaAtOmegaS sigma_at_omega_s(const EllipticContext& ctx) {
  SigmaAtOmegaS out;
  out.value = ctx.sigma(ctx.omega_s());
  const real cs = std::cbrt(std::abs(ctx.s()));
  out.printed_modulus = std::exp(2 * kSqrt3 * kPi / 9) / (std::pow(12.0L, 1.0L / 9) * cs);
  out.true_modulus = std::exp(kSqrt3 * kPi / 9) / cs;
  return out;
}

KiepertDefects kiepert_defects(const EllipticContext& ctx, cplx u) {
  const cplx lhs = ctx.sigma(3.0L * u) / std::pow(ctx.sigma(u), 9);
  const cplx p = ctx.wp(u), s2 = ctx.s() * ctx.s();
  KiepertDefects out;
  out.printed = rel(lhs, 3.0L * p * (p * p * p - 12.0L * s2));
  out.consistent = rel(lhs, 3.0L * p * (p * p * p + s2));
  return out;
}

std::vector<cplx> taylor_coefficients(const std::function<cplx(cplx)>& g, real radius, int count, int samples) {
  std::vector<cplx> vals(samples);
  for (int j = 0; j < samples; ++j) vals[j] = g(std::polar(radius, 2 * kPi * j / samples));
  std::vector<cplx> out(count);
  for (int k = 0; k < count; ++k) {
    cplx acc = 0;
    for (int j = 0; j < samples; ++j) acc += vals[j] * std::polar(1.0L, -2 * kPi * j * k / samples);
    out[k] = acc / static_cast<real>(samples) / std::pow(radius, static_cast<real>(k));
  }
  return out;
}

KodairaExpansion kodaira_iv_expansion(const EllipticContext& ctx) {
  KodairaExpansion out;
  const cplx ws = ctx.omega_s();
  const cplx sig_ws = ctx.sigma(ws);
  out.linear = ctx.zeta(ws);
  const cplx cs = std::pow(ctx.s(), 1.0L / 3);
  out.eta0 = ctx.eta_p() / cs;
  out.eta0_printed = kI * kPi / (3 * kSqrt3) * std::tgamma(2.0L / 3) / std::pow(std::tgamma(1.0L / 3), 2);
  out.linear_printed = (2.0L / 3.0L) * (2.0L + zeta3(2)) * out.eta0_printed * cs;
  const real radius = 0.4L * std::abs(ctx.omega_p());
  const auto c = taylor_coefficients(
      [&](cplx u) { return ctx.sigma(u + ws) * std::exp(-out.linear * u) / sig_ws; }, radius, 8);
  out.c1 = c[1];
  out.c2 = c[2];
  out.c3 = c[3];
  out.c4 = c[4];
  out.c5 = c[5];
  out.c6 = c[6];
  out.sigma_c7 = taylor_coefficients([&](cplx u) { return ctx.sigma(u); }, radius, 8)[7];
  return out;
}

OmegaSCubeDefects omega_s_cube_defects(const EllipticContext& ctx, cplx u) {
  const cplx ws = ctx.omega_s(), ep = ctx.eta_p();
  const cplx base = std::pow(ctx.sigma(u - ws), 3) / (std::pow(ctx.sigma(u), 3) * std::pow(ctx.sigma(ws), 3));
  const cplx target = ctx.y(u) - ctx.s();
  OmegaSCubeDefects out;
  out.literal = rel(std::exp(2.0L * (2.0L + zeta3(1)) * ep * (u + ws) + kPi * kSqrt3) * base, target);
  out.proof = rel(std::exp(2.0L * (2.0L + zeta3(2)) * ep * (u + ws) + 6.0L * ep * ctx.omega_p()) * base, target);
  out.consistent = rel(std::exp(2.0L * (2.0L + zeta3(2)) * ep * u) * base, target);
  return out;
}

CheckList half_lattice_checks(const EllipticContext& ctx) {
  CheckList out;
  const real tol = 1e-8L;
  const cplx ws = ctx.omega_s();
  const real scale = std::abs(ctx.e()[0]);
  for (int r = 0; r < 3; ++r) {
    out.push_back({"elliptic", "p(zeta^" + std::to_string(r) + " omega_s) = 0",
                   std::abs(ctx.wp(zeta3(r) * ws)) / scale, tol});
  }
  out.push_back({"elliptic", "y(omega_s) = s", rel(ctx.y(ws), ctx.s()), tol});
  out.push_back({"elliptic", "y(omega_0) = 0", std::abs(ctx.y(ctx.omega_0())) / std::abs(ctx.s()), tol});
  out.push_back({"elliptic", "zeta omega_s = omega_s - 2 omega'",
                 std::abs(zeta3(1) * ws - (ws - 2.0L * ctx.omega_p())) / std::abs(ws), tol});
  out.push_back({"elliptic", "omega_s / omega' = (2/3)(2 + zeta)",
                 std::abs(ws / ctx.omega_p() - (2.0L / 3.0L) * (2.0L + zeta3(1))), tol});
  return out;
}

}  // namespace trigonal
