#pragma once

#include <cstdint>
#include <random>

#include "trigonal/curves.hpp"
#include "trigonal/theta.hpp"

namespace trigonal {

// Integrals of the first-kind (omega) and second-kind (eta) differentials
// along the canonical leg to each root; one column per root.
struct BranchIntegrals {
  int genus = 3;
  CMat omega;
  CMat eta;
};

struct PeriodDiagnostics {
  real legendre_defect = 0;          // |eta'^T omega'' - omega'^T eta'' - (pi i / 2) I|
  real legendre_printed_defect = 0;  // |omega'^T eta'' - omega''^T eta' - (pi / 2) I|
  real tau_symmetry_defect = 0;
  real im_tau_min_eig = 0;
  real closed_loop_defect = 0;
  real divisor_best = 0;       // vanishing ratio of the selected characteristic
  real divisor_runner_up = 0;  // same ratio for the next best characteristic
};

struct PeriodData {
  int genus = 3;
  FamilyParams params;
  BranchIntegrals branch;
  CMat omega_p;
  CMat omega_pp;
  CMat eta_p;
  CMat eta_pp;
  CMat tau;
  ThetaCharacteristic delta;
  CVec xi;          // Riemann constant in normalized coordinates
  CVec xi_shifted;  // xi minus the normalized image of B0 in genus 2; xi in genus 3
  CVec b0_image;    // first-kind integral to B0 (u coordinates)
  PeriodDiagnostics diag;

  // z = (2 omega')^{-1} u
  CVec normalize(const CVec& u) const;
  CVec lattice_point(const IVec& l1, const IVec& l2) const;
};

struct PeriodOptions {
  QuadratureConfig quad;
  PathGeometry geometry;
  real theta_tol = 1e-12L;
  std::uint64_t seed = 20240601;
  int divisor_samples = 6;
  bool find_characteristic = true;
};

BranchIntegrals branch_integrals(const CurveIntegrator& integ);
BranchIntegrals branch_integrals(const FamilyParams& p, const QuadratureConfig& cfg,
                                 const PathGeometry& geometry = {});

struct HalfPeriods {
  CMat primary;    // omega' or eta'
  CMat secondary;  // omega'' or eta''
};

// Cycle combinations of the legs; `action` holds the diagonal factors of the
// sheet rotation on the integrals being combined. The third beta cycle is
// reversed relative to the printed table so that the result is symplectic;
// pass printed_orientation = true to keep the printed sign.
HalfPeriods assemble_periods_g3(const CMat& columns, const CVec& action,
                                bool printed_orientation = false);
HalfPeriods assemble_periods_g2(const CMat& columns, const CVec& action);

CMat compute_tau(const PeriodData& pd);

// Full pipeline: legs, assembly, tau and (optionally) the characteristic.
PeriodData compute_periods(const CurveIntegrator& integ, const PeriodOptions& opts);
PeriodData compute_periods(const FamilyParams& p, const PeriodOptions& opts = {});

real closed_loop_defect(const BranchIntegrals& bi, const CVec& action);
real check_V_relation(const BranchIntegrals& bi, const CMat& omega_p, const CVec& action);

struct PairDefect {
  real printed = 0;     // identities exactly as printed
  real consistent = 0;  // the same identities in the symplectic basis used here
};
// Entrywise relations between omega'' and omega' (and eta'' and eta').
PairDefect check_conjugate_periods(const PeriodData& pd);

// Entrywise |cofactor expression - tau|. With printed_orientation the
// reference tau is rebuilt from the printed cycle table, which isolates
// index typos from the orientation change.
RMat tau_formula_defects(const PeriodData& pd, bool printed_orientation = false);

// Entrywise defect of the block decomposition of the printed Legendre left
// side, against (pi/2) I or, with against_lhs, against that left side
// evaluated in the printed orientation. Genus 3 only.
RMat legendre_block_defects(const PeriodData& pd, bool against_lhs);

// Periods with the third beta cycle in the printed orientation.
HalfPeriods printed_orientation_omega(const PeriodData& pd);
HalfPeriods printed_orientation_eta(const PeriodData& pd);

struct LatticeVector {
  IVec l1;
  IVec l2;
  real residual = 0;
};
// denominator * v = 2 omega' l1 + 2 omega'' l2 with integer l1, l2.
LatticeVector lattice_decompose(const PeriodData& pd, const CVec& v, int denominator);

// Half characteristic of a normalized half period xi = tau a + b.
ThetaCharacteristic characteristic_of(const PeriodData& pd, const CVec& xi_shifted);

// Riemann constant in normalized coordinates, from the characteristic found
// by the divisor-vanishing search.
CVec riemann_constant(const PeriodData& pd);

struct DivisorSearch {
  ThetaCharacteristic delta;
  real best = 0;
  real runner_up = 0;
};
// Finds the characteristic whose theta vanishes on the images of random
// effective divisors of degree g - 1 (shifted by B0 in genus 2).
DivisorSearch find_characteristic(const CurveIntegrator& integ, const PeriodData& pd,
                                  std::uint64_t seed, int samples, real theta_tol);

// Deterministic uniform variates in [0, 1) from a 64-bit seed.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}
  // 53 random bits scaled to [0, 1); independent of the library's
  // distribution implementations.
  real next() { return static_cast<real>(engine_() >> 11) * 0x1.0p-53L; }
  real range(real lo, real hi) { return lo + (hi - lo) * next(); }

 private:
  std::mt19937_64 engine_;
};

// Random x whose straight path from the base point keeps clear of every
// root, and a random sheet.
struct SamplePoint {
  cplx x;
  int sheet;
};
SamplePoint sample_point(const CurveIntegrator& integ, UniformStream& rng);

}  // namespace trigonal
