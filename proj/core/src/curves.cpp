#include "trigonal/curves.hpp"

#include <algorithm>
#include <cmath>

namespace trigonal {

namespace {

constexpr real kThird = 1.0L / 3.0L;

cplx cube_root(cplx w) { return std::pow(w, kThird); }

bool close(cplx a, cplx b, real scale) { return std::abs(a - b) <= 1e-14L * scale; }

}  // namespace

void FamilyParams::validate() const {
  const real scale = std::max({std::abs(b1), std::abs(b2), std::abs(s), 1.0L});
  const cplx zero{0, 0};
  bool clash = close(b1, b2, scale) || close(b1, zero, scale) || close(b2, zero, scale);
  if (s != zero) clash = clash || close(s, b1, scale) || close(s, b2, scale);
  if (clash) throw NumericError(ErrorCode::InvalidParam, "coincident branch points");
  for (cplx v : {b1, b2, s}) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericError(ErrorCode::InvalidParam, "non-finite parameter");
    }
  }
}

CurveModel CurveModel::genus3(const FamilyParams& p) {
  p.validate();
  if (p.s == cplx(0)) throw NumericError(ErrorCode::InvalidParam, "genus 3 needs s != 0");
  CurveModel m;
  m.genus_ = 3;
  m.params_ = p;
  m.roots_ = {cplx(0), p.b1, p.b2, p.s};
  m.mult_ = {1, 1, 1, 1};
  m.action_.resize(6);
  m.action_ << zeta3(1), zeta3(1), zeta3(2), zeta3(2), zeta3(2), zeta3(1);
  return m;
}

CurveModel CurveModel::genus2(cplx b1, cplx b2) {
  FamilyParams p{b1, b2, cplx(0)};
  p.validate();
  CurveModel m;
  m.genus_ = 2;
  m.params_ = p;
  m.roots_ = {cplx(0), b1, b2};
  m.mult_ = {2, 1, 1};
  m.action_.resize(4);
  m.action_ << zeta3(1), zeta3(2), zeta3(2), zeta3(1);
  return m;
}

CurveModel CurveModel::for_params(const FamilyParams& p) {
  return p.genus() == 3 ? genus3(p) : genus2(p.b1, p.b2);
}

cplx CurveModel::y_cubed(cplx x) const {
  cplx v = 1;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    for (int k = 0; k < mult_[i]; ++k) v *= (x - roots_[i]);
  }
  return v;
}

CVec CurveModel::forms(cplx x, cplx y) const {
  if (genus_ == 3) {
    const cplx y2 = y * y;
    CVec v(6);
    v << 1.0L / (3.0L * y2), x / (3.0L * y2), 1.0L / (3.0L * y),
        -(5.0L * x * x + 3.0L * params_.lambda3() * x + params_.lambda2()) / (3.0L * y),
        -2.0L * x / (3.0L * y), -x * x / (3.0L * y2);
    return v;
  }
  const cplx z = y * y / x;
  CVec v(4);
  v << 1.0L / (3.0L * z), 1.0L / (3.0L * y), -2.0L * x / (3.0L * y), -x / (3.0L * z);
  return v;
}

CVec CurveModel::action_power(int k) const {
  CVec v(action_.size());
  const int r = ((k % 3) + 3) % 3;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    cplx f = 1;
    for (int j = 0; j < r; ++j) f *= action_[i];
    v[i] = f;
  }
  return v;
}

cplx CurveModel::continue_y(cplx xa, cplx ya, cplx x, int skip_root) const {
  cplx v = ya;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (static_cast<int>(i) == skip_root) continue;
    const cplx f = cube_root((x - roots_[i]) / (xa - roots_[i]));
    for (int k = 0; k < mult_[i]; ++k) v *= f;
  }
  return v;
}

cplx CurveModel::infinity_factor(cplx t) const {
  const cplx t3 = t * t * t;
  cplx h = 1;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    const cplx f = cube_root(1.0L - roots_[i] * t3);
    for (int k = 0; k < mult_[i]; ++k) h *= f;
  }
  return h;
}

CurvePoint CurveModel::point(cplx x, cplx y) const {
  CurvePoint p{x, y, cplx(0)};
  if (genus_ == 2 && x != cplx(0)) p.z = y * y / x;
  return p;
}

namespace {

void require_nonzero(cplx v) {
  if (v == cplx(0)) throw NumericError(ErrorCode::AtBranchPoint, "differential evaluated at a branch point");
}

void require_index(int i, int hi) {
  if (i < 1 || i > hi) throw NumericError(ErrorCode::InvalidParam, "differential index out of range");
}

}  // namespace

cplx diff_first_kind_g3(const FamilyParams& p, const CurvePoint& pt, int i) {
  (void)p;
  require_index(i, 3);
  require_nonzero(pt.y);
  switch (i) {
    case 1: return 1.0L / (3.0L * pt.y * pt.y);
    case 2: return pt.x / (3.0L * pt.y * pt.y);
    default: return 1.0L / (3.0L * pt.y);
  }
}

cplx diff_second_kind_g3(const FamilyParams& p, const CurvePoint& pt, int i) {
  require_index(i, 3);
  require_nonzero(pt.y);
  const cplx x = pt.x;
  switch (i) {
    case 1: return -(5.0L * x * x + 3.0L * p.lambda3() * x + p.lambda2()) / (3.0L * pt.y);
    case 2: return -2.0L * x / (3.0L * pt.y);
    default: return -x * x / (3.0L * pt.y * pt.y);
  }
}

cplx diff_first_kind_g2(const FamilyParams& p, const CurvePoint& pt, int i) {
  (void)p;
  require_index(i, 2);
  if (i == 1) {
    require_nonzero(pt.z);
    return 1.0L / (3.0L * pt.z);
  }
  require_nonzero(pt.y);
  return 1.0L / (3.0L * pt.y);
}

cplx diff_second_kind_g2(const FamilyParams& p, const CurvePoint& pt, int i) {
  (void)p;
  require_index(i, 2);
  if (i == 1) {
    require_nonzero(pt.y);
    return -2.0L * pt.x / (3.0L * pt.y);
  }
  require_nonzero(pt.z);
  return -pt.x / (3.0L * pt.z);
}

CurvePoint infinity_parametrization(const FamilyParams& p, cplx t, int genus) {
  const CurveModel m = genus == 3 ? CurveModel::genus3(p) : CurveModel::genus2(p.b1, p.b2);
  if (t == cplx(0)) throw NumericError(ErrorCode::OutOfChart, "t = 0 is the point at infinity");
  real rmax = 0;
  for (cplx r : m.roots()) rmax = std::max(rmax, std::abs(r));
  if (rmax * std::pow(std::abs(t), 3.0L) >= 0.5L) {
    throw NumericError(ErrorCode::OutOfChart, "t outside the chart at infinity");
  }
  const cplx x = 1.0L / (t * t * t);
  const cplx y = m.infinity_factor(t) / (t * t * t * t);
  return m.point(x, y);
}

std::vector<CurvePoint> track_sheet(const FamilyParams& p, const Contour& contour,
                                    int steps_per_edge) {
  if (steps_per_edge < 8) throw NumericError(ErrorCode::InvalidParam, "steps_per_edge must be >= 8");
  if (contour.vertices.empty()) return {};
  const CurveModel m = CurveModel::for_params(p);
  const cplx w = zeta3(1);

  auto roots_at = [&](cplx x) {
    const cplx r = cube_root(m.y_cubed(x));
    return std::array<cplx, 3>{r, r * w, r * w * w};
  };
  auto nearest = [&](cplx x, cplx prev, real& sep) {
    const auto rs = roots_at(x);
    sep = std::abs(rs[0]) * std::sqrt(3.0L);
    cplx best = rs[0];
    for (cplx r : rs)
      if (std::abs(r - prev) < std::abs(best - prev)) best = r;
    return best;
  };

  std::vector<CurvePoint> out;
  cplx y = contour.start_sheet;
  out.push_back(m.point(contour.vertices.front(), y));
  for (std::size_t e = 0; e + 1 < contour.vertices.size(); ++e) {
    const cplx a = contour.vertices[e];
    const cplx b = contour.vertices[e + 1];
    for (int k = 1; k <= steps_per_edge; ++k) {
      const cplx x_prev = a + (b - a) * (static_cast<real>(k - 1) / steps_per_edge);
      const cplx x_next = a + (b - a) * (static_cast<real>(k) / steps_per_edge);
      // Sub-steps are halved until consecutive values are well separated
      // relative to the spacing of the three roots.
      int pieces = 1;
      for (;;) {
        cplx yy = y;
        bool ok = true;
        for (int j = 1; j <= pieces && ok; ++j) {
          const cplx x = x_prev + (x_next - x_prev) * (static_cast<real>(j) / pieces);
          real sep = 0;
          const cplx cand = nearest(x, yy, sep);
          if (!(std::abs(cand - yy) < 0.25L * sep)) ok = false;
          yy = cand;
        }
        if (ok) {
          y = yy;
          break;
        }
        pieces *= 2;
        if (pieces > (1 << 20)) {
          throw NumericError(ErrorCode::SheetAmbiguity, "path passes too close to a branch point");
        }
      }
      out.push_back(m.point(x_next, y));
    }
  }
  return out;
}

CurveIntegrator::CurveIntegrator(CurveModel model, PathGeometry geometry, QuadratureConfig cfg)
    : model_(std::move(model)), geom_(geometry), cfg_(cfg) {
  cfg_.validate();
  const auto& p = model_.params();
  real R = geom_.base_radius;
  if (R <= 0) R = 3.0L * std::max({std::abs(p.b1), std::abs(p.b2), 1.0L}) + 1.0L;
  rho_ = geom_.detour_radius;
  if (rho_ <= 0) rho_ = std::max(3.0L * std::abs(p.s), 0.05L);
  x0_ = std::polar(R, geom_.theta0);

  const cplx t0 = std::pow(x0_, -kThird);
  y0_ = model_.infinity_factor(t0) / (t0 * t0 * t0 * t0);

  const Eigen::Index n = model_.action().size();
  auto circle = [&](real phi) {
    const cplx e = std::polar(1.0L, phi);
    const cplx x = x0_ * e;
    cplx y = y0_ * std::polar(1.0L, 4.0L * phi / 3.0L);
    const auto& rs = model_.roots();
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const cplx f = cube_root((1.0L - rs[i] / x) / (1.0L - rs[i] / x0_));
      for (int k = 0; k < model_.multiplicities()[i]; ++k) y *= f;
    }
    CVec v = model_.forms(x, y) * (kI * x);
    return v;
  };
  const CVec loop = integrate_param(circle, 0.0L, 2.0L * kPi, n, cfg_);
  base_.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) base_[i] = -loop[i] / (1.0L - model_.action()[i]);
}

CVec CurveIntegrator::segment(cplx xa, cplx ya, cplx xb, cplx& yb) const {
  const cplx d = xb - xa;
  auto g = [&](real p) {
    const cplx x = xa + d * p;
    return CVec(model_.forms(x, model_.continue_y(xa, ya, x)) * d);
  };
  yb = model_.continue_y(xa, ya, xb);
  return integrate_param(g, 0.0L, 1.0L, model_.action().size(), cfg_);
}

CVec CurveIntegrator::branch_leg(cplx xa, cplx ya, int root) const {
  const cplx b = model_.roots().at(root);
  const int m = model_.multiplicities()[root];
  const cplx t1 = cube_root(xa - b);
  const cplx g1 = ya / std::pow(t1, m);
  auto g = [&](real p) {
    const cplx tau = t1 * (1.0L - p);
    const cplx x = b + tau * tau * tau;
    const cplx y = std::pow(tau, m) * model_.continue_y(xa, g1, x, root);
    return CVec(model_.forms(x, y) * (3.0L * tau * tau * (-t1)));
  };
  return integrate_param(g, 0.0L, 1.0L, model_.action().size(), cfg_);
}

CVec CurveIntegrator::from_infinity(cplx t) const {
  const int g = model_.genus();
  auto f = [&](real p) {
    const cplx tau = t * p;
    const cplx tau3 = tau * tau * tau;
    const cplx x = 1.0L / tau3;
    const cplx y = model_.infinity_factor(tau) / (tau3 * tau);
    const CVec all = model_.forms(x, y);
    return CVec(all.head(g) * (-3.0L / (tau3 * tau) * t));
  };
  return integrate_param(f, 0.0L, 1.0L, g, cfg_);
}

std::vector<cplx> CurveIntegrator::leg_vertices(int root) const {
  std::vector<cplx> pts{x0_};
  if (root != model_.detour_root()) return pts;
  const real lo = geom_.theta0 + kPi / 2;
  real ph = std::arg(model_.roots()[root]);
  while (ph < lo) ph += 2 * kPi;
  while (ph >= lo + 2 * kPi) ph -= 2 * kPi;
  // Never sweep across the direction of the leg to 0; turn back instead.
  if (ph > geom_.theta0 + 2 * kPi) ph -= 2 * kPi;
  const int n = std::max(1, geom_.arc_segments);
  for (int k = 0; k <= n; ++k) pts.push_back(std::polar(rho_, lo + (ph - lo) * k / n));
  return pts;
}

CVec CurveIntegrator::branch_integral(int root) const {
  const auto pts = leg_vertices(root);
  CVec total = base_;
  cplx y = y0_;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    cplx yn;
    total += segment(pts[i], y, pts[i + 1], yn);
    y = yn;
  }
  total += branch_leg(pts.back(), y, root);
  return total;
}

CurveIntegrator::AbelImage CurveIntegrator::abel(cplx x, int sheet) const {
  for (cplx r : model_.roots()) {
    if (std::abs(x - r) < 1e-12L) throw NumericError(ErrorCode::AtBranchPoint, "abel image requested at a branch point");
  }
  cplx y;
  CVec v = base_ + segment(x0_, y0_, x, y);
  const CVec rot = model_.action_power(sheet);
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] *= rot[i];
  y *= zeta3(sheet);
  return {model_.point(x, y), v};
}

bool CurveIntegrator::legs_in_canonical_order() const {
  const auto& rs = model_.roots();
  auto offset = [&](cplx r) { return std::arg((r - x0_) / (-x0_)); };
  const real d1 = offset(rs[1]);
  const real d2 = offset(rs[2]);
  if (!(d1 > 1e-6L && d2 > d1 + 1e-6L)) return false;
  if (model_.genus() == 3) {
    const real smax = std::abs(model_.params().s);
    if (!(rho_ > smax) || rho_ >= 0.5L * std::min(std::abs(rs[1]), std::abs(rs[2]))) return false;
    // The straight legs to b1, b2 must clear the detour disc around 0.
    for (int a : {1, 2}) {
      const cplx d = rs[a] - x0_;
      const real p = std::clamp(std::real(std::conj(d) * (-x0_)) / std::norm(d), 0.0L, 1.0L);
      if (std::abs(x0_ + p * d) < 1.5L * rho_) return false;
    }
  }
  return true;
}

}  // namespace trigonal
