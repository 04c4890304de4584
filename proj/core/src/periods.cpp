#include "trigonal/periods.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace trigonal {

namespace {

using Poly = std::array<int, 3>;  // coefficients of 1, zeta-hat, zeta-hat^2
constexpr Poly kNone{0, 0, 0};

// Rows: legs to B0..B3. Columns: alpha_1..alpha_3, beta_1..beta_3.
constexpr std::array<std::array<Poly, 6>, 4> kCyclesG3{{
    {{kNone, kNone, Poly{0, 1, -1}, Poly{1, 0, -1}, kNone, Poly{1, 0, -1}}},
    {{Poly{-1, 1, 0}, kNone, kNone, Poly{-1, 1, 0}, Poly{-1, 0, 1}, kNone}},
    {{kNone, Poly{1, 0, -1}, kNone, kNone, Poly{1, 0, -1}, kNone}},
    {{kNone, kNone, Poly{0, -1, 1}, Poly{0, -1, 1}, kNone, Poly{-1, 0, 1}}},
}};

// Rows: legs to B0..B2. Columns: alpha_1, alpha_2, beta_1, beta_2.
constexpr std::array<std::array<Poly, 4>, 3> kCyclesG2{{
    {{kNone, kNone, Poly{1, -1, 0}, kNone}},
    {{Poly{-1, 1, 0}, kNone, Poly{-1, 1, 0}, Poly{-1, 0, 1}}},
    {{kNone, Poly{1, 0, -1}, kNone, Poly{1, 0, -1}}},
}};

// omega_a = (2/3) sum_j V[j][a] omega'_j. Rows j, columns a.
constexpr std::array<std::array<Poly, 4>, 3> kInverseG3{{
    {{Poly{-1, 0, 1}, Poly{-1, 0, 1}, kNone, Poly{-1, 0, 1}}},
    {{Poly{0, 1, -1}, kNone, Poly{1, -1, 0}, Poly{0, 1, -1}}},
    {{Poly{-1, 0, 1}, kNone, kNone, Poly{-1, 1, 0}}},
}};

CVec apply_poly(const Poly& c, const CVec& action, const CVec& v) {
  CVec out = CVec::Zero(v.size());
  for (int k = 0; k < 3; ++k) {
    if (c[k] == 0) continue;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      cplx f = 1;
      for (int j = 0; j < k; ++j) f *= action[i];
      out[i] += static_cast<real>(c[k]) * f * v[i];
    }
  }
  return out;
}

template <std::size_t R, std::size_t C>
CMat combine(const std::array<std::array<Poly, C>, R>& table, const CMat& columns,
             const CVec& action) {
  CMat out = CMat::Zero(columns.rows(), static_cast<Eigen::Index>(C));
  for (std::size_t j = 0; j < C; ++j) {
    CVec acc = CVec::Zero(columns.rows());
    for (std::size_t a = 0; a < R; ++a) {
      acc += apply_poly(table[a][j], action, columns.col(static_cast<Eigen::Index>(a)));
    }
    out.col(static_cast<Eigen::Index>(j)) = 0.5L * acc;
  }
  return out;
}

real rel(cplx lhs, cplx rhs) {
  const real den = std::max({std::abs(lhs), std::abs(rhs), static_cast<real>(1e-300L)});
  return std::abs(lhs - rhs) / den;
}

// Max relative defect of X'' against the entrywise expressions in X'.
// c is the power used in the first two columns of the leading rows.
real conjugate_defect_g3(const CMat& xp, const CMat& xpp, cplx c, cplx d, real third_sign) {
  real m = 0;
  for (int i = 0; i < 2; ++i) {
    m = std::max(m, rel(xpp(i, 0), -c * xp(i, 1)));
    m = std::max(m, rel(xpp(i, 1), -c * xp(i, 0) + xp(i, 1)));
    m = std::max(m, rel(xpp(i, 2), -third_sign * d * xp(i, 2)));
  }
  m = std::max(m, rel(xpp(2, 0), -d * xp(2, 1)));
  m = std::max(m, rel(xpp(2, 1), -d * xp(2, 0) + xp(2, 1)));
  m = std::max(m, rel(xpp(2, 2), -third_sign * c * xp(2, 2)));
  return m;
}

real conjugate_defect_g2(const CMat& xp, const CMat& xpp, cplx row1, cplx row2) {
  real m = 0;
  const cplx cs[2] = {row1, row2};
  for (int i = 0; i < 2; ++i) {
    m = std::max(m, rel(xpp(i, 0), -cs[i] * xp(i, 1)));
    m = std::max(m, rel(xpp(i, 1), -cs[i] * xp(i, 0) + xp(i, 1)));
  }
  return m;
}

}  // namespace

CVec PeriodData::normalize(const CVec& u) const {
  return mat_inverse(CMat(2.0L * omega_p)) * u;
}

CVec PeriodData::lattice_point(const IVec& l1, const IVec& l2) const {
  return 2.0L * omega_p * l1.cast<real>().cast<cplx>() + 2.0L * omega_pp * l2.cast<real>().cast<cplx>();
}

BranchIntegrals branch_integrals(const CurveIntegrator& integ) {
  if (!integ.legs_in_canonical_order()) {
    throw NumericError(ErrorCode::InvalidParam,
                       "branch points are not in the canonical order seen from the base point");
  }
  const CurveModel& m = integ.model();
  const int g = m.genus();
  const int n = static_cast<int>(m.roots().size());
  BranchIntegrals bi;
  bi.genus = g;
  bi.omega.resize(g, n);
  bi.eta.resize(g, n);
  for (int a = 0; a < n; ++a) {
    const CVec v = integ.branch_integral(a);
    bi.omega.col(a) = v.head(g);
    bi.eta.col(a) = v.tail(g);
  }
  return bi;
}

BranchIntegrals branch_integrals(const FamilyParams& p, const QuadratureConfig& cfg,
                                 const PathGeometry& geometry) {
  return branch_integrals(CurveIntegrator(CurveModel::for_params(p), geometry, cfg));
}

HalfPeriods assemble_periods_g3(const CMat& columns, const CVec& action, bool printed_orientation) {
  if (columns.rows() != 3 || columns.cols() != 4 || action.size() != 3) {
    throw NumericError(ErrorCode::InvalidParam, "genus-3 assembly expects 3x4 integrals");
  }
  CMat all = combine(kCyclesG3, columns, action);
  if (!printed_orientation) all.col(5) *= -1.0L;
  return {all.leftCols(3), all.rightCols(3)};
}

HalfPeriods assemble_periods_g2(const CMat& columns, const CVec& action) {
  if (columns.rows() != 2 || columns.cols() != 3 || action.size() != 2) {
    throw NumericError(ErrorCode::InvalidParam, "genus-2 assembly expects 2x3 integrals");
  }
  const CMat all = combine(kCyclesG2, columns, action);
  return {all.leftCols(2), all.rightCols(2)};
}

CMat compute_tau(const PeriodData& pd) { return mat_inverse(pd.omega_p) * pd.omega_pp; }

real closed_loop_defect(const BranchIntegrals& bi, const CVec& action) {
  const int g = bi.genus;
  auto loop = [&](const CMat& cols, const CVec& act) {
    CVec r;
    if (g == 3) {
      r = apply_poly({1, 0, -1}, act, cols.col(2)) + apply_poly({0, 0, 1}, act, apply_poly({1, 0, -1}, act, cols.col(1))) +
          apply_poly({0, 1, 0}, act, apply_poly({1, 0, -1}, act, cols.col(0))) +
          apply_poly({1, 0, -1}, act, cols.col(3));
    } else {
      r = apply_poly({0, 1, -1}, act, cols.col(0)) + apply_poly({0, -1, 1}, act, cols.col(1)) +
          apply_poly({1, 0, -1}, act, cols.col(2));
    }
    return r.cwiseAbs().maxCoeff() / std::max(max_abs(cols), static_cast<real>(1e-300L));
  };
  return std::max(loop(bi.omega, action.head(g)), loop(bi.eta, action.tail(g)));
}

real check_V_relation(const BranchIntegrals& bi, const CMat& omega_p, const CVec& action) {
  if (bi.genus != 3) throw NumericError(ErrorCode::InvalidParam, "the V relation is a genus-3 identity");
  const CVec act = action.head(3);
  CMat rebuilt = CMat::Zero(3, 4);
  for (int a = 0; a < 4; ++a) {
    for (int j = 0; j < 3; ++j) {
      rebuilt.col(a) += (2.0L / 3.0L) * apply_poly(kInverseG3[j][a], act, omega_p.col(j));
    }
  }
  const real scale = max_abs(bi.omega);
  if (scale == 0) return 0;
  return max_abs(rebuilt - bi.omega) / scale;
}

HalfPeriods printed_orientation_omega(const PeriodData& pd) {
  HalfPeriods h{pd.omega_p, pd.omega_pp};
  if (pd.genus == 3) h.secondary.col(2) *= -1.0L;
  return h;
}

HalfPeriods printed_orientation_eta(const PeriodData& pd) {
  HalfPeriods h{pd.eta_p, pd.eta_pp};
  if (pd.genus == 3) h.secondary.col(2) *= -1.0L;
  return h;
}

PairDefect check_conjugate_periods(const PeriodData& pd) {
  const cplx z1 = zeta3(1);
  const cplx z2 = zeta3(2);
  PairDefect out;
  if (pd.genus == 3) {
    out.printed = std::max(conjugate_defect_g3(pd.omega_p, pd.omega_pp, z2, z1, 1.0L),
                           conjugate_defect_g3(pd.eta_p, pd.eta_pp, z1, z2, 1.0L));
    out.consistent = std::max(conjugate_defect_g3(pd.omega_p, pd.omega_pp, z2, z1, -1.0L),
                              conjugate_defect_g3(pd.eta_p, pd.eta_pp, z1, z2, -1.0L));
  } else {
    out.printed = std::max(conjugate_defect_g2(pd.omega_p, pd.omega_pp, z2, z2),
                           conjugate_defect_g2(pd.eta_p, pd.eta_pp, z1, z1));
    out.consistent = std::max(conjugate_defect_g2(pd.omega_p, pd.omega_pp, z2, z1),
                              conjugate_defect_g2(pd.eta_p, pd.eta_pp, z1, z2));
  }
  return out;
}

RMat tau_formula_defects(const PeriodData& pd, bool printed_orientation) {
  const cplx z1 = zeta3(1);
  const cplx z2 = zeta3(2);
  const CMat& w = pd.omega_p;
  CMat ref = pd.tau;
  if (printed_orientation) {
    const HalfPeriods h = printed_orientation_omega(pd);
    ref = mat_inverse(h.primary) * h.secondary;
  }
  CMat formula;
  if (pd.genus == 3) {
    const cplx det = small_det(w);
    const cplx A = w(0, 2) * w(1, 1) - w(0, 1) * w(1, 2);
    const cplx B = w(0, 0) * w(1, 2) - w(0, 2) * w(1, 0);
    const cplx C = w(0, 1) * w(1, 0) - w(0, 0) * w(1, 1);
    CMat t1(3, 3), t2(3, 3);
    t1 << A * w(2, 1), A * w(2, 0), -A * w(2, 2),
          B * w(2, 1), B * w(2, 0), -B * w(2, 2),
          C * w(2, 1), C * w(2, 0), -B * w(2, 1) + A * w(2, 0);
    t2 << -A * w(2, 1), B * w(2, 1) + C * w(2, 2), A * w(2, 2),
          C * w(2, 2) + A * w(2, 0), (w(0, 2) * w(1, 0) - w(0, 0) * w(1, 1)) * w(2, 0), B * w(2, 2),
          -C * w(2, 1), -C * w(2, 0), C * w(2, 2);
    CMat base = CMat::Zero(3, 3);
    base(1, 1) = 1;
    formula = base + (z1 / det) * t1 + (z2 / det) * t2;
  } else {
    const cplx det = small_det(w);
    CMat t1(2, 2), t2(2, 2);
    t1 << w(1, 1) * w(0, 1), w(0, 1) * w(1, 0), -w(0, 0) * w(1, 1), -w(0, 0) * w(1, 0);
    t2 << w(1, 1) * w(0, 1), -w(0, 0) * w(1, 1), w(0, 1) * w(1, 0), w(1, 0) * w(0, 0);
    CMat base = CMat::Zero(2, 2);
    base(1, 1) = 1;
    formula = base + (z1 / det) * t1 + (z2 / det) * t2;
  }
  return (formula - ref).cwiseAbs();
}

RMat legendre_block_defects(const PeriodData& pd, bool against_lhs) {
  if (pd.genus != 3) throw NumericError(ErrorCode::InvalidParam, "block decomposition is a genus-3 identity");
  auto o = [&](int i, int j) { return pd.omega_p(i - 1, j - 1); };
  auto e = [&](int i, int j) { return pd.eta_p(i - 1, j - 1); };
  CMat l0(3, 3), l1(3, 3), l2(3, 3);
  l0 << 0, e(1, 2) * o(1, 1) + e(2, 2) * o(2, 1) + e(3, 2) * o(3, 1), 0,
      -e(1, 1) * o(1, 2) - e(2, 1) * o(2, 2) - e(3, 1) * o(3, 1), 0,
      -e(1, 3) * o(1, 2) - e(2, 3) * o(2, 2) - e(3, 3) * o(3, 2),
      0, e(1, 2) * o(1, 3) + e(2, 2) * o(2, 3) + e(3, 2) * o(3, 3), 0;
  l1 << -e(1, 2) * o(1, 1) - e(2, 2) * o(2, 1) + e(3, 1) * o(3, 2),
      -e(1, 1) * o(1, 1) - e(2, 1) * o(2, 1) + e(3, 2) * o(3, 2),
      -e(3, 3) * (o(3, 1) - o(3, 2)),
      -e(1, 2) * o(1, 2) - e(2, 2) * o(2, 2) + e(3, 1) * o(3, 1),
      -e(1, 1) * o(1, 2) - e(2, 1) * o(2, 2) + e(3, 2) * o(3, 1),
      -e(3, 3) * (o(3, 1) - o(3, 2)),
      (e(1, 1) - e(1, 2)) * o(1, 3) + (e(2, 1) - e(2, 2)) * o(2, 3),
      -(e(1, 1) - e(1, 2)) * o(1, 3) - (e(2, 1) - e(2, 2)) * o(2, 3),
      e(1, 3) * o(1, 3) - e(2, 3) * o(2, 3) - e(3, 3) * o(3, 3);
  l2 << e(1, 1) * o(1, 2) + e(2, 1) * o(2, 2) - e(3, 2) * o(3, 1),
      e(1, 2) * o(1, 2) + e(2, 2) * o(2, 2) - e(3, 1) * o(3, 1),
      -e(1, 3) * (o(1, 1) - o(1, 2)) - e(2, 3) * (o(2, 1) - o(2, 2)),
      e(1, 1) * o(1, 1) + e(2, 1) * o(2, 1) - e(3, 2) * o(3, 2),
      e(1, 2) * o(1, 1) + e(2, 2) * o(2, 1) - e(3, 1) * o(3, 2),
      e(1, 3) * (o(1, 1) - o(1, 2)) + e(2, 3) * (o(2, 1) - o(2, 2)),
      (e(3, 1) - e(3, 2)) * o(3, 3), (e(3, 2) - e(3, 1)) * o(3, 3),
      -e(1, 3) * o(1, 3) - e(2, 3) * o(2, 3) + e(3, 3) * o(3, 3);
  const CMat blocks = l0 + zeta3(1) * l1 + zeta3(2) * l2;
  CMat ref;
  if (against_lhs) {
    const HalfPeriods w = printed_orientation_omega(pd);
    const HalfPeriods h = printed_orientation_eta(pd);
    ref = w.primary.transpose() * h.secondary - w.secondary.transpose() * h.primary;
  } else {
    ref = (kPi / 2) * CMat::Identity(3, 3);
  }
  return (blocks - ref).cwiseAbs();
}

LatticeVector lattice_decompose(const PeriodData& pd, const CVec& v, int denominator) {
  if (denominator < 1) throw NumericError(ErrorCode::InvalidParam, "denominator must be >= 1");
  const int g = pd.genus;
  RMat sys(2 * g, 2 * g);
  sys.block(0, 0, g, g) = (2.0L * pd.omega_p).real();
  sys.block(0, g, g, g) = (2.0L * pd.omega_pp).real();
  sys.block(g, 0, g, g) = (2.0L * pd.omega_p).imag();
  sys.block(g, g, g, g) = (2.0L * pd.omega_pp).imag();
  Eigen::FullPivLU<RMat> lu(sys);
  if (!lu.isInvertible()) throw NumericError(ErrorCode::Singular, "real period matrix is singular");
  RVec rhs(2 * g);
  const CVec dv = static_cast<real>(denominator) * v;
  rhs.head(g) = dv.real();
  rhs.tail(g) = dv.imag();
  const RVec coef = lu.solve(rhs);
  LatticeVector out;
  out.l1.resize(g);
  out.l2.resize(g);
  real res = 0;
  for (int i = 0; i < g; ++i) {
    out.l1[i] = std::lround(coef[i]);
    out.l2[i] = std::lround(coef[g + i]);
    res = std::max({res, std::abs(coef[i] - out.l1[i]), std::abs(coef[g + i] - out.l2[i])});
  }
  out.residual = res;
  if (res > 1e-6L) throw NumericError(ErrorCode::NotInLattice, "vector is not in the lattice");
  return out;
}

ThetaCharacteristic characteristic_of(const PeriodData& pd, const CVec& xi_shifted) {
  const int g = pd.genus;
  const CMat tau = 0.5L * (pd.tau + pd.tau.transpose());
  const RMat y = tau.imag();
  const RVec a = y.fullPivLu().solve(xi_shifted.imag());
  const RVec b = xi_shifted.real() - tau.real() * a;
  ThetaCharacteristic ch = ThetaCharacteristic::zero(g);
  auto snap = [](real v, real& out) {
    real r = v - std::floor(v);
    if (r > 1 - 1e-6L) r -= 1;
    if (std::abs(r) < 1e-6L) {
      out = 0;
      return true;
    }
    if (std::abs(r - 0.5L) < 1e-6L) {
      out = 0.5L;
      return true;
    }
    return false;
  };
  for (int i = 0; i < g; ++i) {
    if (!snap(a[i], ch.a[i]) || !snap(b[i], ch.b[i])) {
      throw NumericError(ErrorCode::NotHalfPeriod, "vector is not a half period");
    }
  }
  return ch;
}

CVec riemann_constant(const PeriodData& pd) { return pd.xi; }

SamplePoint sample_point(const CurveIntegrator& integ, UniformStream& rng) {
  const auto& roots = integ.model().roots();
  real lo = 0, hi = 0, span = 1;
  for (cplx r : roots) {
    lo = std::min(lo, r.real());
    hi = std::max(hi, r.real());
    span = std::max(span, std::abs(r));
  }
  real smallest = 1;
  for (std::size_t i = 1; i < roots.size(); ++i) smallest = std::min(smallest, std::abs(roots[i]));
  const real s_abs = integ.model().genus() == 3 ? std::abs(roots[3]) : 0;
  const real clear = std::max(0.25L * std::min(smallest, static_cast<real>(1)), 4 * s_abs);
  const cplx x0 = integ.base_x();
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const cplx x{rng.range(lo - 1, hi + 1), rng.range(-0.6L * span, 0.6L * span)};
    const int sheet = static_cast<int>(rng.next() * 3) % 3;
    bool ok = true;
    for (cplx r : roots) {
      if (std::abs(x - r) < clear) ok = false;
      // Distance from r to the straight path x0 -> x.
      const cplx d = x - x0;
      const real p = std::clamp(std::real(std::conj(d) * (r - x0)) / std::norm(d), 0.0L, 1.0L);
      if (std::abs(x0 + p * d - r) < 0.5L * clear) ok = false;
    }
    if (ok) return {x, sheet};
  }
  throw NumericError(ErrorCode::InvalidParam, "could not sample a point away from the roots");
}

DivisorSearch find_characteristic(const CurveIntegrator& integ, const PeriodData& pd,
                                  std::uint64_t seed, int samples, real theta_tol) {
  const int g = pd.genus;
  UniformStream rng(seed);
  auto image = [&]() {
    const SamplePoint sp = sample_point(integ, rng);
    return CVec(integ.abel(sp.x, sp.sheet).value.head(g));
  };
  const CVec shift = g == 2 ? pd.b0_image : CVec::Zero(g);
  std::vector<CVec> divisors, references;
  for (int k = 0; k < samples; ++k) {
    CVec u = shift;
    for (int j = 0; j < g - 1; ++j) u += image();
    divisors.push_back(pd.normalize(u));
  }
  for (int k = 0; k < 3; ++k) {
    CVec u = shift;
    for (int j = 0; j < g; ++j) u += image();
    references.push_back(pd.normalize(u));
  }

  DivisorSearch out;
  out.best = 1e300L;
  out.runner_up = 1e300L;
  for (const auto& ch : all_half_characteristics(g)) {
    const ThetaFunction th(ThetaParams{pd.tau, ch, theta_tol});
    real scale = 0;
    for (const auto& z : references) scale += std::abs(th.value(z)) / references.size();
    real worst = 0;
    for (const auto& z : divisors) worst = std::max(worst, std::abs(th.value(z)));
    const real ratio = worst / std::max(scale, static_cast<real>(1e-300L));
    if (ratio < out.best) {
      out.runner_up = out.best;
      out.best = ratio;
      out.delta = ch;
    } else if (ratio < out.runner_up) {
      out.runner_up = ratio;
    }
  }
  if (!(out.best < 1e-6L) || !(out.runner_up > 1e3L * out.best)) {
    throw NumericError(ErrorCode::AmbiguousCharacteristic,
                       "divisor test did not single out one characteristic (best " +
                           std::to_string(static_cast<double>(out.best)) + ", runner-up " +
                           std::to_string(static_cast<double>(out.runner_up)) + ")");
  }
  return out;
}

PeriodData compute_periods(const CurveIntegrator& integ, const PeriodOptions& opts) {
  const CurveModel& m = integ.model();
  const int g = m.genus();
  PeriodData pd;
  pd.genus = g;
  pd.params = m.params();
  pd.branch = branch_integrals(integ);
  const CVec act1 = m.action().head(g);
  const CVec act2 = m.action().tail(g);
  const HalfPeriods w = g == 3 ? assemble_periods_g3(pd.branch.omega, act1)
                               : assemble_periods_g2(pd.branch.omega, act1);
  const HalfPeriods e = g == 3 ? assemble_periods_g3(pd.branch.eta, act2)
                               : assemble_periods_g2(pd.branch.eta, act2);
  pd.omega_p = w.primary;
  pd.omega_pp = w.secondary;
  pd.eta_p = e.primary;
  pd.eta_pp = e.secondary;
  pd.tau = compute_tau(pd);
  pd.b0_image = pd.branch.omega.col(0);

  auto& d = pd.diag;
  const CMat legendre = pd.eta_p.transpose() * pd.omega_pp - pd.omega_p.transpose() * pd.eta_pp;
  d.legendre_defect = max_abs(legendre - (kI * kPi / 2.0L) * CMat::Identity(g, g));
  const CMat printed = pd.omega_p.transpose() * pd.eta_pp - pd.omega_pp.transpose() * pd.eta_p;
  d.legendre_printed_defect = max_abs(printed - (kPi / 2.0L) * CMat::Identity(g, g));
  d.tau_symmetry_defect = max_abs(pd.tau - pd.tau.transpose());
  const RMat im = (0.5L * (pd.tau + pd.tau.transpose())).imag();
  d.im_tau_min_eig = Eigen::SelfAdjointEigenSolver<RMat>(im).eigenvalues().minCoeff();
  d.closed_loop_defect = closed_loop_defect(pd.branch, m.action());

  pd.delta = ThetaCharacteristic::zero(g);
  pd.xi_shifted = CVec::Zero(g);
  pd.xi = CVec::Zero(g);
  if (opts.find_characteristic) {
    const DivisorSearch ds = find_characteristic(integ, pd, opts.seed, opts.divisor_samples, opts.theta_tol);
    pd.delta = ds.delta;
    d.divisor_best = ds.best;
    d.divisor_runner_up = ds.runner_up;
    const CMat tau = 0.5L * (pd.tau + pd.tau.transpose());
    pd.xi_shifted = tau * pd.delta.a.cast<cplx>() + pd.delta.b.cast<cplx>();
    pd.xi = pd.xi_shifted;
    if (g == 2) pd.xi += pd.normalize(pd.b0_image);
  }
  return pd;
}

PeriodData compute_periods(const FamilyParams& p, const PeriodOptions& opts) {
  const CurveIntegrator integ(CurveModel::for_params(p), opts.geometry, opts.quad);
  return compute_periods(integ, opts);
}

}  // namespace trigonal
