#include "trigonal/degen.hpp"

#include <algorithm>
#include <cmath>

namespace trigonal {

namespace {

constexpr real kThird = 1.0L / 3.0L;

std::vector<cplx> binomial_coefficients(real a, cplx b, int order) {
  // (1 - x/b)^{-a} = sum (a)_l / l! (x/b)^l
  std::vector<cplx> c(order + 1);
  c[0] = 1;
  for (int l = 1; l <= order; ++l) c[l] = c[l - 1] * (a + l - 1) / static_cast<real>(l) / b;
  return c;
}

std::vector<cplx> cauchy_product(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out(a.size(), 0);
  for (std::size_t l = 0; l < a.size(); ++l)
    for (std::size_t i = 0; i <= l; ++i) out[l] += a[i] * b[l - i];
  return out;
}

// Integral over [0, 1] of g(t) / (t (1 - t))^{power}, power in {1/3, 2/3},
// with t = v^3 near 0 and 1 - t = v^3 near 1.
cplx beta_weighted(const std::function<cplx(real)>& g, real power, const QuadratureConfig& cfg) {
  const real edge = std::cbrt(0.5L);
  auto left = [&](real v) {
    const real t = v * v * v;
    CVec r(1);
    r[0] = g(t) * 3.0L * std::pow(v, 2 - 3 * power) / std::pow(1 - t, power);
    return r;
  };
  auto right = [&](real v) {
    const real w = v * v * v;
    CVec r(1);
    r[0] = g(1 - w) * 3.0L * std::pow(v, 2 - 3 * power) / std::pow(1 - w, power);
    return r;
  };
  return integrate_param(left, 0.0L, edge, 1, cfg)[0] + integrate_param(right, 0.0L, edge, 1, cfg)[0];
}

// Cube root of x^2 (x - s)^2 with both arguments taken in [0, 2 pi).
cplx contour_root(cplx x, real s) {
  auto arg2pi = [](cplx z) {
    real a = std::arg(z);
    if (a < 0) a += 2 * kPi;
    return a;
  };
  const real a0 = arg2pi(x);
  const real a1 = arg2pi(x - s);
  return std::pow(std::abs(x) * std::abs(x - s), 2.0L * kThird) * std::polar(1.0L, 2.0L * (a0 + a1) / 3.0L);
}

// Integral of f along t -> base + t for t in [0, infinity), with t = w^-3 past 1.
cplx ray_integral(const std::function<cplx(cplx)>& f, cplx base, const QuadratureConfig& cfg) {
  auto near = [&](real t) {
    CVec r(1);
    r[0] = f(base + t);
    return r;
  };
  auto far = [&](real w) {
    CVec r(1);
    if (w == 0) {
      r[0] = 0;
      return r;
    }
    const real t = 1.0L / (w * w * w);
    r[0] = f(base + t) * 3.0L / (w * w * w * w);
    return r;
  };
  return integrate_param(near, 0.0L, 1.0L, 1, cfg)[0] + integrate_param(far, 0.0L, 1.0L, 1, cfg)[0];
}

RMat fit_design(const std::vector<cplx>& s_grid) {
  RMat m(s_grid.size(), 4);
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    const real a = std::abs(s_grid[i]);
    const real h = std::cbrt(a);
    m.row(i) << std::log(a), 1, h, h * h;
  }
  return m;
}

CVec first_kind(const CVec& v, int g) { return v.head(g); }

// Leg to B0 that passes around the pair {0, s}: the loop from infinity
// around both roots, divided by (1 - M^2) where M^2 is its monodromy. It
// stays away from the colliding pair, so it is regular as s -> 0.
CVec cluster_leg(const CurveIntegrator& integ) {
  const CurveModel& m = integ.model();
  const auto& roots = m.roots();
  const real r = 0.5L * std::min(std::abs(roots[1]), std::abs(roots[2]));
  const cplx x0 = integ.base_x();
  const cplx xc = r * x0 / std::abs(x0);
  cplx y = integ.base_y(), next;
  CVec loop = integ.segment(x0, y, xc, next);
  y = next;
  constexpr int kChords = 64;
  cplx xa = xc;
  for (int k = 1; k <= kChords; ++k) {
    const cplx xb = k == kChords ? xc : xc * std::polar(1.0L, 2 * kPi * k / kChords);
    loop += integ.segment(xa, y, xb, next);
    y = next;
    xa = xb;
  }
  loop += integ.segment(xc, y, x0, next);
  const CVec mono = m.action_power(2);
  if (std::abs(next - zeta3(2) * integ.base_y()) > 1e-8L * std::abs(next)) {
    throw NumericError(ErrorCode::SheetAmbiguity, "loop around the colliding pair ended on an unexpected sheet");
  }
  loop += integ.base_value() - mono.cwiseProduct(integ.base_value());
  return loop.cwiseQuotient(CVec(CVec::Ones(mono.size()) - mono));
}

}  // namespace

cplx h_prefactor(const FamilyParams& p, int a) {
  return zeta3(a) * std::pow(p.b1 * p.b2, -static_cast<real>(a) / 3.0L);
}

cplx h_direct(const FamilyParams& p, int a, cplx x) {
  const real e = -static_cast<real>(a) / 3.0L;
  return h_prefactor(p, a) * std::pow(1.0L - x / p.b1, e) * std::pow(1.0L - x / p.b2, e);
}

SeriesCoefficients h_series(const FamilyParams& p, int order) {
  if (order < 0 || order > 60) throw NumericError(ErrorCode::InvalidParam, "series order must be 0..60");
  SeriesCoefficients sc = c_series(order);
  sc.beta1 = cauchy_product(binomial_coefficients(kThird, p.b1, order), binomial_coefficients(kThird, p.b2, order));
  sc.beta2 = cauchy_product(binomial_coefficients(2 * kThird, p.b1, order),
                            binomial_coefficients(2 * kThird, p.b2, order));
  return sc;
}

cplx h_partial_sum(const FamilyParams& p, const SeriesCoefficients& sc, int a, cplx x) {
  const auto& beta = a == 1 ? sc.beta1 : sc.beta2;
  cplx sum = 0, pw = 1;
  for (const cplx& b : beta) {
    sum += b * pw;
    pw *= x;
  }
  return h_prefactor(p, a) * sum;
}

SeriesCoefficients c_series(int order) {
  if (order < 0 || order > 60) throw NumericError(ErrorCode::InvalidParam, "series order must be 0..60");
  SeriesCoefficients sc;
  sc.order = order;
  sc.c1.assign(order + 1, 1);
  sc.c2.assign(order + 1, 1);
  for (int l = 1; l <= order; ++l) {
    sc.c1[l] = sc.c1[l - 1] * (kThird + l - 1) / l;
    sc.c2[l] = sc.c2[l - 1] * (2 * kThird + l - 1) / l;
  }
  return sc;
}

std::vector<real> c_series_printed(int k, int order) {
  if (k != 1 && k != 2) throw NumericError(ErrorCode::InvalidParam, "k must be 1 or 2");
  std::vector<real> out(order + 1);
  for (int l = 0; l <= order; ++l) {
    real tf = 1;
    for (int n = 3 * l + k; n > 0; n -= 3) tf *= n;
    out[l] = tf / std::tgamma(static_cast<real>(l) + 1) * std::pow(k / 3.0L, static_cast<real>(l));
  }
  return out;
}

cplx c_series_sum(int k, cplx r, real tol) {
  if (k != 1 && k != 2) throw NumericError(ErrorCode::InvalidParam, "k must be 1 or 2");
  const real a = k / 3.0L;
  cplx term = 1;
  return sum_series(
      [&](int l) {
        if (l > 0) term *= (a + l - 1) / static_cast<real>(l) * r;
        return term;
      },
      tol, 2000);
}

cplx A1_series(const FamilyParams& p, int order) {
  const SeriesCoefficients sc = h_series(p, order);
  const real s = p.s.real();
  // Gamma(l + 1/3) Gamma(1/3) / Gamma(l + 2/3), advanced by its ratio.
  real g = std::tgamma(kThird) * std::tgamma(kThird) / std::tgamma(2 * kThird);
  cplx sum = 0;
  real pw = 1;
  for (int l = 0; l <= order; ++l) {
    const cplx term = sc.beta2[l] * pw * g;
    sum += term;
    if (l > 5 && std::abs(term) < 1e-19L * std::abs(sum)) break;
    if (l == order) throw NumericError(ErrorCode::NonConvergence, "A1 series did not converge");
    g *= (l + kThird) / (l + 2 * kThird);
    pw *= s;
  }
  return std::pow(s, -kThird) * h_prefactor(p, 2) * sum;
}

cplx A1_quadrature(const FamilyParams& p, const QuadratureConfig& cfg) {
  const real s = p.s.real();
  auto g = [&](real t) { return h_direct(p, 2, cplx(s * t)); };
  return std::pow(s, -kThird) * beta_weighted(g, 2 * kThird, cfg);
}

RegularSingularPair I1_I2_quadrature(const FamilyParams& p, real rho, const QuadratureConfig& cfg) {
  const real s = p.s.real();
  if (!(s > 0) || !(rho > s)) throw NumericError(ErrorCode::InvalidParam, "need 0 < s < rho");
  if (p.b1.imag() <= rho || p.b2.imag() <= rho) {
    throw NumericError(ErrorCode::InvalidParam, "rho must stay below the imaginary parts of b1, b2");
  }
  auto phi = [&](cplx x) { return h_direct(p, 2, x) / contour_root(x, s); };
  const cplx top = -ray_integral(phi, cplx(0, rho), cfg);
  const cplx bottom = ray_integral(phi, cplx(0, -rho), cfg);
  auto arc = [&](real th) {
    CVec r(1);
    const cplx x = std::polar(rho, th);
    r[0] = phi(x) * kI * x;
    return r;
  };
  const cplx around = integrate_param(arc, kPi / 2, 3 * kPi / 2, 1, cfg)[0];
  RegularSingularPair out;
  out.I1 = (top + around + bottom) / (zeta3(2) - 1.0L);

  // [s, s + 1] with x = s + v^3, then [s + 1, infinity) with x = s + 1 + t.
  auto near = [&](real v) {
    CVec r(1);
    const real x = s + v * v * v;
    r[0] = h_direct(p, 2, cplx(x)) * 3.0L / std::pow(x, 2 * kThird);
    return r;
  };
  auto positive = [&](cplx x) {
    return h_direct(p, 2, x) / std::pow(x.real() * x.real() * (x.real() - s) * (x.real() - s), kThird);
  };
  out.I2 = integrate_param(near, 0.0L, 1.0L, 1, cfg)[0] + ray_integral(positive, cplx(s + 1), cfg);
  return out;
}

std::vector<cplx> default_s_grid() { return {1e-1L, 3e-2L, 1e-2L, 3e-3L, 1e-3L, 3e-4L, 1e-4L}; }

DegenerationReport scaling_probe(const std::string& name, const std::vector<cplx>& s_grid,
                                 const std::vector<cplx>& values) {
  if (s_grid.size() != values.size() || s_grid.size() < 5) {
    throw NumericError(ErrorCode::InvalidParam, "scaling fit needs at least five grid points");
  }
  for (std::size_t i = 1; i < s_grid.size(); ++i) {
    if (!(std::abs(s_grid[i]) < std::abs(s_grid[i - 1]))) {
      throw NumericError(ErrorCode::InvalidParam, "s grid must decrease in modulus");
    }
  }
  DegenerationReport r;
  r.observable = name;
  r.s_grid = s_grid;
  r.values = values;
  const RMat m = fit_design(s_grid);
  RVec y(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) y[i] = std::log(std::abs(values[i]));
  const RVec coef = m.colPivHouseholderQr().solve(y);
  r.fitted_exponent = coef[0];
  r.fit_residual = (m * coef - y).cwiseAbs().maxCoeff();
  const cplx last = values.back();
  r.limit_estimate = std::exp(coef[1]) * (last / std::abs(last));
  return r;
}

DegenerationReport scaling_probe(const std::string& name, const std::vector<cplx>& s_grid,
                                 const std::function<cplx(cplx)>& observable) {
  std::vector<cplx> v;
  v.reserve(s_grid.size());
  for (const cplx& s : s_grid) v.push_back(observable(s));
  return scaling_probe(name, s_grid, v);
}

cplx extrapolate_cuberoot(const std::vector<cplx>& s_grid, const std::vector<cplx>& values, int terms) {
  const int n = static_cast<int>(values.size());
  if (terms < 1 || terms > n) throw NumericError(ErrorCode::InvalidParam, "bad extrapolation window");
  // Polynomial in h = |s|^{1/3} through the last `terms` points, evaluated at 0.
  const int first = n - terms;
  cplx out = 0;
  for (int i = first; i < n; ++i) {
    const real hi = std::cbrt(std::abs(s_grid[i]));
    real w = 1;
    for (int j = first; j < n; ++j) {
      if (j == i) continue;
      const real hj = std::cbrt(std::abs(s_grid[j]));
      w *= hj / (hj - hi);
    }
    out += w * values[i];
  }
  return out;
}

std::vector<DegenerationReport> period_scalings(cplx b1, cplx b2, const std::vector<cplx>& s_grid,
                                                const PeriodOptions& opts) {
  PeriodOptions o = opts;
  o.find_characteristic = false;
  std::vector<std::vector<cplx>> cols(9);
  for (const cplx& s : s_grid) {
    const CurveIntegrator integ(CurveModel::for_params(FamilyParams{b1, b2, s}), o.geometry, o.quad);
    const PeriodData pd = compute_periods(integ, o);
    const CVec leg0 = cluster_leg(integ);
    cols[0].push_back(pd.omega_p(0, 2));
    cols[1].push_back(small_det(pd.omega_p));
    for (int j = 0; j < 3; ++j) cols[2 + j].push_back(pd.eta_p(0, j));
    for (int i = 0; i < 3; ++i) cols[5 + i].push_back(leg0[i]);
    cols[8].push_back(pd.branch.omega(0, 0));
  }
  const char* names[9] = {"omega'_13",       "det omega'",      "eta'_11",
                          "eta'_12",         "eta'_13",         "leg0 nu_1",
                          "leg0 nu_2",       "leg0 nu_3",       "straight leg0 nu_1"};
  std::vector<DegenerationReport> out;
  for (int k = 0; k < 9; ++k) out.push_back(scaling_probe(names[k], s_grid, cols[k]));
  return out;
}

std::vector<DegenerationReport> limit_compare_periods(cplx b1, cplx b2, const std::vector<cplx>& s_grid,
                                                      const PeriodOptions& opts) {
  PeriodOptions o = opts;
  o.find_characteristic = false;
  const PeriodData ref = compute_periods(FamilyParams{b1, b2, 0}, o);
  std::vector<std::vector<cplx>> cols(6);
  for (const cplx& s : s_grid) {
    const PeriodData pd = compute_periods(FamilyParams{b1, b2, s}, o);
    cols[0].push_back(max_abs(pd.omega_p.block(1, 0, 2, 2) - ref.omega_p));
    cols[1].push_back(max_abs(pd.omega_pp.block(1, 0, 2, 2) - ref.omega_pp));
    cols[2].push_back(max_abs(pd.eta_p.block(1, 0, 2, 2) - ref.eta_p));
    cols[3].push_back(max_abs(pd.eta_pp.block(1, 0, 2, 2) - ref.eta_pp));
    cols[4].push_back(max_abs(pd.tau.block(0, 0, 2, 2) - ref.tau));
    cols[5].push_back(max_abs(pd.eta_p.block(0, 0, 1, 3)));
  }
  const char* names[6] = {"omega' block", "omega'' block", "eta' block", "eta'' block", "tau block",
                          "eta' first row"};
  std::vector<DegenerationReport> out;
  for (int k = 0; k < 6; ++k) out.push_back(scaling_probe(names[k], s_grid, cols[k]));
  return out;
}

RiemannConstantLimit limit_riemann_constant(cplx b1, cplx b2, const std::vector<cplx>& s_grid,
                                            const PeriodOptions& opts) {
  const PeriodData ref = compute_periods(FamilyParams{b1, b2, 0}, opts);
  const CMat tau2 = 0.5L * (ref.tau + ref.tau.transpose());
  const RMat y2inv = tau2.imag().inverse();
  RiemannConstantLimit out;
  std::vector<cplx> defects;
  for (const cplx& s : s_grid) {
    const PeriodData pd = compute_periods(FamilyParams{b1, b2, s}, opts);
    CVec d = pd.xi.head(2) - ref.xi_shifted;
    // Reduce modulo Z^2 + tau Z^2.
    const RVec n = (y2inv * d.imag()).array().round().matrix();
    d -= tau2 * n.cast<cplx>();
    d -= d.real().array().round().matrix().cast<cplx>();
    defects.push_back(d.cwiseAbs().maxCoeff());
    out.characteristic_match.push_back(ThetaCharacteristic{pd.delta.a.head(2), pd.delta.b.head(2)} == ref.delta);
  }
  out.defect = scaling_probe("riemann constant", s_grid, defects);
  const CVec twice = 2.0L * ref.omega_p * (2.0L * ref.xi_shifted);
  out.shifted_half_period_residual = lattice_decompose(ref, twice, 2).residual;
  return out;
}

ExpansionCheck branch_sigma_expansion_check(const FamilyParams& p, cplx t1, cplx t2, const PeriodOptions& opts) {
  const CurveIntegrator integ(CurveModel::for_params(p), opts.geometry, opts.quad);
  const SigmaContext ctx(compute_periods(integ, opts));
  const CVec u = integ.from_infinity(t1) + integ.from_infinity(t2) + first_kind(ctx.periods().branch.omega.col(3), 3);
  ExpansionCheck out;
  out.ratio = -ctx(u) * std::pow(p.b1 * p.b2, kThird) * std::pow(p.s, kThird) / (std::sqrt(2.0L) * t1 * t2);
  out.modulus_defect = std::abs(out.ratio) - 1;
  out.phase_cube_defect = std::abs(std::pow(out.ratio / std::abs(out.ratio), 3) - 1.0L);
  return out;
}

std::vector<SectionPair> default_section_points() {
  return {SectionPair{SectionPoint{1.5L, 0}, SectionPoint{2.5L, 0}},
          SectionPair{SectionPoint{1.5L, 1}, SectionPoint{2.5L, 2}},
          SectionPair{SectionPoint{cplx(0.5L, 0.5L), 0}, SectionPoint{cplx(2.5L, -0.5L), 1}}};
}

MainTheoremPoint main_theorem_check(cplx b1, cplx b2, SectionPoint p1, SectionPoint p2,
                                    const std::vector<cplx>& s_grid, const PeriodOptions& opts) {
  const FamilyParams base{b1, b2, 0};
  const CurveIntegrator integ2(CurveModel::for_params(base), opts.geometry, opts.quad);
  const SigmaContext sig2(compute_periods(integ2, opts));
  const CVec v = first_kind(integ2.abel(p1.x, p1.sheet).value, 2) +
                 first_kind(integ2.abel(p2.x, p2.sheet).value, 2) + sig2.periods().b0_image;
  const cplx target = sig2(v);
  MainTheoremPoint out;
  out.p1 = p1;
  out.p2 = p2;
  for (const cplx& s : s_grid) {
    const FamilyParams fp{b1, b2, s};
    const CurveIntegrator integ3(CurveModel::for_params(fp), opts.geometry, opts.quad);
    const SigmaContext sig3(compute_periods(integ3, opts));
    const CVec u = first_kind(integ3.abel(p1.x, p1.sheet).value, 3) +
                   first_kind(integ3.abel(p2.x, p2.sheet).value, 3) +
                   first_kind(sig3.periods().branch.omega.col(3), 3);
    out.ratios.push_back(std::pow(s * b1 * b2, kThird) / std::sqrt(2.0L) * sig3(u) / target);
  }
  out.limit = extrapolate_cuberoot(s_grid, out.ratios, 3);
  out.modulus_defect_last = std::abs(out.ratios.back()) - 1;
  out.modulus_defect_limit = std::abs(out.limit) - 1;
  out.phase_cube_defect = std::abs(std::pow(out.limit / std::abs(out.limit), 3) - 1.0L);
  std::vector<cplx> gaps;
  for (const cplx& r : out.ratios) gaps.push_back(r - out.limit);
  // The last points feed the extrapolation, so fit the decay on the rest.
  const std::size_t keep = s_grid.size() - 2;
  if (keep >= 5) {
    out.convergence_exponent =
        scaling_probe("main theorem", std::vector<cplx>(s_grid.begin(), s_grid.begin() + keep),
                      std::vector<cplx>(gaps.begin(), gaps.begin() + keep))
            .fitted_exponent;
  }
  return out;
}

DegenerationReport differential_convergence(cplx b1, cplx b2, cplx x, const std::vector<cplx>& s_grid) {
  const QuadratureConfig cfg;
  const CurveIntegrator integ2(CurveModel::for_params(FamilyParams{b1, b2, 0}), {}, cfg);
  const auto p2 = integ2.abel(x, 0).point;
  const CVec ref = integ2.model().forms(p2.x, p2.y);
  std::vector<cplx> defects;
  for (const cplx& s : s_grid) {
    const CurveIntegrator integ3(CurveModel::for_params(FamilyParams{b1, b2, s}), {}, cfg);
    const auto p3 = integ3.abel(x, 0).point;
    const CVec f = integ3.model().forms(p3.x, p3.y);
    // First kind: genus-3 entries 2, 3 against genus-2 entries 1, 2; second
    // kind: the same shift.
    real d = 0;
    for (int i = 0; i < 2; ++i) {
      d = std::max(d, std::abs(f[1 + i] - ref[i]));
      d = std::max(d, std::abs(f[4 + i] - ref[2 + i]));
    }
    defects.push_back(d);
  }
  return scaling_probe("differentials", s_grid, defects);
}

}  // namespace trigonal
