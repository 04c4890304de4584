#pragma once

#include <array>

#include "trigonal/periods.hpp"

namespace trigonal {

// Printed closed form of the genus-3 discriminant constant.
cplx discriminant_g3(const FamilyParams& p);
// -2^12 3^9 disc(f)^2, the value the normalization constant actually needs.
cplx discriminant_g3_true(const FamilyParams& p);

struct SigmaJet {
  cplx value;
  CVec grad;
  CMat hess;
};

// sigma(u) = c exp(u^T S u / 2) theta[delta](A u), S = sym(eta' omega'^-1),
// A = (2 omega')^-1. The constant c is calibrated so that the leading Taylor
// term is the Schur polynomial; the closed-form constant is kept alongside
// for comparison.
class SigmaContext {
 public:
  explicit SigmaContext(PeriodData periods, real theta_tol = 1e-14L);

  int genus() const { return pd_.genus; }
  const PeriodData& periods() const { return pd_; }
  const FamilyParams& params() const { return pd_.params; }
  cplx c() const { return c_; }
  // ((2 pi)^3 / det omega')^{1/2} Delta^{-1/8}, principal branches, genus 3.
  cplx c_formula() const { return c_formula_; }
  cplx c_formula_printed() const { return c_formula_printed_; }
  cplx discriminant() const { return disc_; }
  const CMat& quadratic() const { return S_; }
  const CMat& normalizer() const { return A_; }
  const ThetaFunction& theta_fn() const { return theta_; }

  cplx operator()(const CVec& u) const;
  // Value and derivatives up to `order` (0..2), from the theta jet.
  SigmaJet jet(const CVec& u, int order) const;

 private:
  SigmaJet unnormalized(const CVec& u, int order) const;

  PeriodData pd_;
  CMat S_;
  CMat A_;
  ThetaFunction theta_;
  cplx c_ = 1;
  cplx c_formula_ = 0;
  cplx c_formula_printed_ = 0;
  cplx disc_ = 0;
};

SigmaContext make_sigma_context(const PeriodData& pd);
cplx sigma(const SigmaContext& ctx, const CVec& u);

// exp(L(u + l/2, l)) chi(l) for l = 2 omega' l1 + 2 omega'' l2.
cplx translation_factor(const SigmaContext& ctx, const CVec& u, const IVec& l1, const IVec& l2);
// chi(l) alone; always +1 or -1.
int translation_sign(const ThetaCharacteristic& delta, const IVec& l1, const IVec& l2);

// Leading Taylor polynomials in the weighted coordinates (weights 5, 2, 1
// and 3, 1) that the Abel images of points near infinity satisfy.
cplx schur_311(const CVec& u);
cplx schur_11(const CVec& v);
// The displayed forms u1 - u2^2 u3 and v1 - v2^2, kept to report their defect.
cplx schur_311_printed(const CVec& u);
cplx schur_11_printed(const CVec& v);

// |c / c_formula| - 1 and the index k with arg(c / c_formula) ~ k pi / 4.
struct ConstantComparison {
  real modulus_defect = 0;
  int eighth_root_index = 0;
  real phase_residual = 0;
};
ConstantComparison compare_constant(const SigmaContext& ctx, bool printed_discriminant);

// Second derivative in u3 at zeta-hat^c omega_a, together with the ratio of
// |sigma33|^3 |f'(b_a)| to 2^{3/2} (1 when the closed form holds).
struct Sigma33 {
  cplx value;
  real closed_form_ratio = 0;
};
Sigma33 sigma33_at_branch(const SigmaContext& ctx, int a, int c);

struct AlContext {
  int a = 0;
  int c = 0;
  CVec phi;
  CVec omega_ac;
  cplx sigma33_at = 0;
  LatticeVector shift;  // decomposition of 3 omega_ac
};
AlContext make_al_context(const SigmaContext& ctx, int a, int c);

// e^{-u.phi} sigma(u + omega_ac) / (sigma(u) sigma33(omega_ac)).
cplx al(const SigmaContext& ctx, const AlContext& alc, const CVec& u);

// A_a^3 / prod (b_a - x_i) with A_a the ratio of the 4x4 and 3x3 determinants.
cplx al_rhs_cubed(const FamilyParams& p, int a, const std::array<CurvePoint, 3>& pts);

}  // namespace trigonal
