#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "trigonal/sigma.hpp"

namespace trigonal {

// Taylor data of h_a(x) = zeta^a (b1 b2)^{-a/3} (1 - x/b1)^{-a/3} (1 - x/b2)^{-a/3}
// (the prefactor is kept out of beta) and of (1 - r)^{-1/3}, (1 - r)^{-2/3}.
struct SeriesCoefficients {
  std::vector<cplx> beta1;
  std::vector<cplx> beta2;
  std::vector<real> c1;
  std::vector<real> c2;
  int order = 0;
};

SeriesCoefficients h_series(const FamilyParams& p, int order);
cplx h_prefactor(const FamilyParams& p, int a);
cplx h_direct(const FamilyParams& p, int a, cplx x);
cplx h_partial_sum(const FamilyParams& p, const SeriesCoefficients& sc, int a, cplx x);

// Binomial coefficients (k/3)_l / l! for k = 1, 2.
SeriesCoefficients c_series(int order);
// The triple-factorial coefficients as displayed: (3l+k)!!! / l! (k/3)^l.
std::vector<real> c_series_printed(int k, int order);
// sum_l c_l r^l for the binomial coefficients; NonConvergence outside |r| < 1.
cplx c_series_sum(int k, cplx r, real tol = 1e-16L);

// Integral of h2 / (x^2 (x - s)^2)^{1/3} over [0, s], by its series and by
// quadrature. Real s > 0 is assumed.
cplx A1_series(const FamilyParams& p, int order = 60);
cplx A1_quadrature(const FamilyParams& p, const QuadratureConfig& cfg = {});

struct RegularSingularPair {
  cplx I1;  // detoured contour divided by (zeta^2 - 1)
  cplx I2;  // integral over [s, infinity) with the positive root
};
RegularSingularPair I1_I2_quadrature(const FamilyParams& p, real rho = 0.5L,
                                     const QuadratureConfig& cfg = {});

struct DegenerationReport {
  std::string observable;
  std::vector<cplx> s_grid;
  std::vector<cplx> values;
  real fitted_exponent = 0;
  cplx limit_estimate = 0;
  real fit_residual = 0;
};

std::vector<cplx> default_s_grid();

// Fits log|v| = p log|s| + a + b |s|^{1/3} + c |s|^{2/3}; the extra terms
// absorb the corrections that a plain log-log slope would fold into p.
DegenerationReport scaling_probe(const std::string& name, const std::vector<cplx>& s_grid,
                                 const std::vector<cplx>& values);
DegenerationReport scaling_probe(const std::string& name, const std::vector<cplx>& s_grid,
                                 const std::function<cplx(cplx)>& observable);

// Richardson extrapolation to s = 0 of values that are regular in h = s^{1/3},
// using the last `terms` grid points.
cplx extrapolate_cuberoot(const std::vector<cplx>& s_grid, const std::vector<cplx>& values,
                          int terms = 3);

// Scalings of the half periods and leg integrals as s -> 0.
std::vector<DegenerationReport> period_scalings(cplx b1, cplx b2, const std::vector<cplx>& s_grid,
                                                const PeriodOptions& opts = {});

// Sub-block defects of the genus-3 data against the genus-2 data.
std::vector<DegenerationReport> limit_compare_periods(cplx b1, cplx b2,
                                                      const std::vector<cplx>& s_grid,
                                                      const PeriodOptions& opts = {});

struct RiemannConstantLimit {
  DegenerationReport defect;
  std::vector<bool> characteristic_match;
  real shifted_half_period_residual = 0;
};
RiemannConstantLimit limit_riemann_constant(cplx b1, cplx b2, const std::vector<cplx>& s_grid,
                                            const PeriodOptions& opts = {});

// |R| - 1 and |R^3 / |R|^3 - 1| for
// R = -sigma(u1 + u2 + omega_s) cbrt(b1 b2) s^{1/3} / (sqrt 2 t1 t2).
struct ExpansionCheck {
  cplx ratio;
  real modulus_defect = 0;
  real phase_cube_defect = 0;
};
ExpansionCheck branch_sigma_expansion_check(const FamilyParams& p, cplx t1, cplx t2,
                                            const PeriodOptions& opts = {});

struct SectionPoint {
  cplx x;
  int sheet;
};
struct MainTheoremPoint {
  SectionPoint p1;
  SectionPoint p2;
  std::vector<cplx> ratios;  // cbrt(s b1 b2) / sqrt 2 sigma_3(u) / sigma_2(v) per grid point
  cplx limit;                // extrapolated to s = 0
  real modulus_defect_last = 0;  // |ratio at the smallest s| - 1
  real modulus_defect_limit = 0;
  real phase_cube_defect = 0;    // |(limit / |limit|)^3 - 1|
  real convergence_exponent = 0;
};
using SectionPair = std::array<SectionPoint, 2>;
std::vector<SectionPair> default_section_points();
MainTheoremPoint main_theorem_check(cplx b1, cplx b2, SectionPoint p1, SectionPoint p2,
                                    const std::vector<cplx>& s_grid, const PeriodOptions& opts = {});

// Max over the differentials of |nu_{s, i+1}(x) - nu_{0, i}(x)| on the
// x-constant section, per grid point.
DegenerationReport differential_convergence(cplx b1, cplx b2, cplx x,
                                            const std::vector<cplx>& s_grid);

}  // namespace trigonal
