#include "trigonal/sigma.hpp"

#include <cmath>

namespace trigonal {

namespace {

CMat symmetric_quadratic(const PeriodData& pd) {
  const CMat s = pd.eta_p * mat_inverse(pd.omega_p);
  return 0.5L * (s + s.transpose());
}

cplx root_product_squared(const std::vector<cplx>& roots) {
  cplx d = 1;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) d *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
  return d;
}

}  // namespace

cplx discriminant_g3(const FamilyParams& p) {
  const cplx s = p.s, b1 = p.b1, b2 = p.b2;
  const cplx inner = std::pow(s + b2, 3) * std::pow(b1, 3) +
                     3.0L * s * b2 * (s + b2 / 4.0L) * (s + 4.0L * b2) * b1 * b1 +
                     3.0L * s * s * b2 * b2 * (s + b2) * b1 + std::pow(s, 3) * std::pow(b2, 3);
  return -729.0L * std::pow(s, 4) * std::pow(b2, 4) * std::pow(b1, 4) * inner * inner;
}

cplx discriminant_g3_true(const FamilyParams& p) {
  const cplx d = root_product_squared({0, p.b1, p.b2, p.s});
  return -std::pow(2.0L, 12) * std::pow(3.0L, 9) * d * d;
}

SigmaContext::SigmaContext(PeriodData periods, real theta_tol)
    : pd_(std::move(periods)),
      S_(symmetric_quadratic(pd_)),
      A_(mat_inverse(CMat(2.0L * pd_.omega_p))),
      theta_(ThetaParams{pd_.tau, pd_.delta, theta_tol}) {
  const int g = pd_.genus;
  const cplx det = small_det(pd_.omega_p);
  if (std::abs(det) == 0) throw NumericError(ErrorCode::Singular, "omega' is singular");
  if (g == 3) {
    const SigmaJet j = unnormalized(CVec::Zero(3), 1);
    if (std::abs(j.grad[0]) == 0) throw NumericError(ErrorCode::Singular, "sigma has a degenerate linear term");
    c_ = -1.0L / j.grad[0];
    disc_ = discriminant_g3_true(pd_.params);
    const cplx lead = std::sqrt(std::pow(2 * kPi, 3) / det);
    c_formula_ = lead * std::pow(disc_, -0.125L);
    c_formula_printed_ = lead * std::pow(discriminant_g3(pd_.params), -0.125L);
  } else {
    const SigmaJet j = unnormalized(pd_.b0_image, 1);
    if (std::abs(j.grad[0]) == 0) throw NumericError(ErrorCode::Singular, "sigma has a degenerate linear term");
    c_ = 1.0L / j.grad[0];
  }
}

SigmaJet SigmaContext::unnormalized(const CVec& u, int order) const {
  const int g = pd_.genus;
  if (u.size() != g) throw NumericError(ErrorCode::InvalidParam, "sigma argument has the wrong size");
  const CVec su = S_ * u;
  const cplx q = std::exp(0.5L * bdot(u, su));
  const ThetaFunction::Jet t = theta_.jet(A_ * u, order);
  SigmaJet out;
  out.value = q * t.value;
  if (order >= 1) {
    const CVec tg = A_.transpose() * t.grad;
    const CVec qg = q * su;
    out.grad = q * tg + t.value * qg;
    if (order >= 2) {
      const CMat th = A_.transpose() * t.hess * A_;
      const CMat qh = q * (S_ + su * su.transpose());
      out.hess = q * th + qg * tg.transpose() + tg * qg.transpose() + t.value * qh;
    }
  }
  return out;
}

cplx SigmaContext::operator()(const CVec& u) const { return c_ * unnormalized(u, 0).value; }

SigmaJet SigmaContext::jet(const CVec& u, int order) const {
  if (order < 0 || order > 2) throw NumericError(ErrorCode::InvalidParam, "sigma jet order must be 0..2");
  SigmaJet j = unnormalized(u, order);
  j.value *= c_;
  if (order >= 1) j.grad *= c_;
  if (order >= 2) j.hess *= c_;
  return j;
}

SigmaContext make_sigma_context(const PeriodData& pd) { return SigmaContext(pd); }

cplx sigma(const SigmaContext& ctx, const CVec& u) { return ctx(u); }

int translation_sign(const ThetaCharacteristic& delta, const IVec& l1, const IVec& l2) {
  const RVec a = l1.cast<real>();
  const RVec b = l2.cast<real>();
  const real e = 2 * (a.dot(delta.a) - b.dot(delta.b)) + a.dot(b);
  // e is an integer for half characteristics.
  return std::llround(e) % 2 == 0 ? 1 : -1;
}

cplx translation_factor(const SigmaContext& ctx, const CVec& u, const IVec& l1, const IVec& l2) {
  const PeriodData& pd = ctx.periods();
  const CVec c1 = l1.cast<real>().cast<cplx>();
  const CVec c2 = l2.cast<real>().cast<cplx>();
  const CVec ell = pd.lattice_point(l1, l2);
  const CVec eta_l = pd.eta_p * c1 + pd.eta_pp * c2;
  const cplx L = 2.0L * bdot(CVec(u + 0.5L * ell), eta_l);
  return std::exp(L) * static_cast<real>(translation_sign(pd.delta, l1, l2));
}

cplx schur_311(const CVec& u) { return u[0] - u[1] * u[1] * u[2] + std::pow(u[2], 5) / 20.0L; }
cplx schur_11(const CVec& v) { return 0.5L * v[1] * v[1] - v[0]; }
cplx schur_311_printed(const CVec& u) { return u[0] - u[1] * u[1] * u[2]; }
cplx schur_11_printed(const CVec& v) { return v[0] - v[1] * v[1]; }

ConstantComparison compare_constant(const SigmaContext& ctx, bool printed_discriminant) {
  if (ctx.genus() != 3) throw NumericError(ErrorCode::InvalidParam, "closed-form constant is genus 3 only");
  const cplx ratio = ctx.c() / (printed_discriminant ? ctx.c_formula_printed() : ctx.c_formula());
  ConstantComparison out;
  out.modulus_defect = std::abs(ratio) - 1;
  const real k = std::arg(ratio) / (kPi / 4);
  const long r = std::lround(k);
  out.eighth_root_index = static_cast<int>(((r % 8) + 8) % 8);
  out.phase_residual = std::abs(k - static_cast<real>(r)) * kPi / 4;
  return out;
}

Sigma33 sigma33_at_branch(const SigmaContext& ctx, int a, int c) {
  if (ctx.genus() != 3) throw NumericError(ErrorCode::InvalidParam, "sigma33 is a genus-3 quantity");
  if (a < 0 || a > 3) throw NumericError(ErrorCode::InvalidParam, "branch index must be 0..3");
  const CurveModel model = CurveModel::for_params(ctx.params());
  const CVec w = model.action_power(c).head(3).cwiseProduct(ctx.periods().branch.omega.col(a));
  Sigma33 out;
  out.value = ctx.jet(w, 2).hess(2, 2);
  cplx fp = 1;
  const auto& roots = model.roots();
  for (int i = 0; i < 4; ++i)
    if (i != a) fp *= roots[a] - roots[i];
  out.closed_form_ratio = std::pow(std::abs(out.value), 3) * std::abs(fp) / std::pow(2.0L, 1.5L);
  return out;
}

AlContext make_al_context(const SigmaContext& ctx, int a, int c) {
  if (ctx.genus() != 3) throw NumericError(ErrorCode::InvalidParam, "al functions are genus-3 functions");
  const PeriodData& pd = ctx.periods();
  const CurveModel model = CurveModel::for_params(ctx.params());
  AlContext out;
  out.a = a;
  out.c = ((c % 3) + 3) % 3;
  out.omega_ac = model.action_power(out.c).head(3).cwiseProduct(pd.branch.omega.col(a));
  out.shift = lattice_decompose(pd, out.omega_ac, 3);
  out.phi = (2.0L / 3.0L) * (pd.eta_p * out.shift.l1.cast<real>().cast<cplx>() +
                             pd.eta_pp * out.shift.l2.cast<real>().cast<cplx>());
  out.sigma33_at = sigma33_at_branch(ctx, a, out.c).value;
  return out;
}

cplx al(const SigmaContext& ctx, const AlContext& alc, const CVec& u) {
  const cplx den = ctx(u);
  if (std::abs(den) < 1e-30L) throw NumericError(ErrorCode::OnThetaDivisor, "sigma vanishes at the argument");
  return std::exp(-bdot(u, alc.phi)) * ctx(CVec(u + alc.omega_ac)) / (den * alc.sigma33_at);
}

cplx al_rhs_cubed(const FamilyParams& p, int a, const std::array<CurvePoint, 3>& pts) {
  const CurveModel model = CurveModel::for_params(p);
  const cplx b = model.roots().at(a);
  CMat m4(4, 4), m3(3, 3);
  for (int i = 0; i < 3; ++i) {
    m4.row(i) << 1, pts[i].x, pts[i].y, pts[i].x * pts[i].x;
    m3.row(i) << 1, pts[i].x, pts[i].y;
  }
  m4.row(3) << 1, b, 0, b * b;
  const cplx d3 = small_det(m3);
  if (std::abs(d3) == 0) throw NumericError(ErrorCode::Singular, "points are collinear in (x, y)");
  const cplx ratio = small_det(m4) / d3;
  cplx prod = 1;
  for (const auto& pt : pts) prod *= b - pt.x;
  if (std::abs(prod) == 0) throw NumericError(ErrorCode::Pole, "a point lies over the branch point");
  return ratio * ratio * ratio / prod;
}

}  // namespace trigonal
