#pragma once

#include <vector>

#include "trigonal/numkernel.hpp"

namespace trigonal {

// Family y^3 = x (x - s)(x - b1)(x - b2). With s = 0 the model switches to
// the normalization of the singular member, y^3 = x^2 (x - b1)(x - b2).
struct FamilyParams {
  cplx b1{2.0L, 0.0L};
  cplx b2{3.0L, 0.0L};
  cplx s{0.1L, 0.0L};

  int genus() const { return s == cplx(0) ? 2 : 3; }
  cplx lambda3() const { return -(s + b1 + b2); }
  cplx lambda2() const { return s * b1 + s * b2 + b1 * b2; }
  cplx lambda1() const { return -s * b1 * b2; }
  cplx f(cplx x) const { return x * (x - s) * (x - b1) * (x - b2); }
  // Throws InvalidParam on coincident branch points.
  void validate() const;
  FamilyParams with_s(cplx new_s) const { return {b1, b2, new_s}; }
};

struct CurvePoint {
  cplx x;
  cplx y;
  cplx z;  // y^2 / x on the genus-2 normalization; unused in genus 3
};

struct Contour {
  std::vector<cplx> vertices;
  cplx start_sheet;
};

// Branch data and differentials of one curve. Roots are ordered
// B0 = 0, B1 = b1, B2 = b2 and, in genus 3, B3 = s.
class CurveModel {
 public:
  static CurveModel genus3(const FamilyParams& p);
  static CurveModel genus2(cplx b1, cplx b2);
  static CurveModel for_params(const FamilyParams& p);

  int genus() const { return genus_; }
  const std::vector<cplx>& roots() const { return roots_; }
  const std::vector<int>& multiplicities() const { return mult_; }
  const FamilyParams& params() const { return params_; }
  // Index of the root reached by a detour around B0 (B3 = s), or -1.
  int detour_root() const { return genus_ == 3 ? 3 : -1; }

  cplx y_cubed(cplx x) const;
  // Values of the first-kind then second-kind differentials divided by dx.
  CVec forms(cplx x, cplx y) const;
  // Diagonal factors by which (x, y) -> (x, zeta y) rescales the 2g form values.
  const CVec& action() const { return action_; }
  CVec action_power(int k) const;

  // Continues y from (xa, ya) to x along the straight segment.
  cplx continue_y(cplx xa, cplx ya, cplx x, int skip_root = -1) const;
  // h(t) = y t^4 at x = t^-3 on the sheet with y t^4 -> 1.
  cplx infinity_factor(cplx t) const;
  CurvePoint point(cplx x, cplx y) const;

 private:
  int genus_ = 3;
  FamilyParams params_;
  std::vector<cplx> roots_;
  std::vector<int> mult_;
  CVec action_;
};

cplx diff_first_kind_g3(const FamilyParams& p, const CurvePoint& pt, int i);
cplx diff_second_kind_g3(const FamilyParams& p, const CurvePoint& pt, int i);
cplx diff_first_kind_g2(const FamilyParams& p, const CurvePoint& pt, int i);
cplx diff_second_kind_g2(const FamilyParams& p, const CurvePoint& pt, int i);

// x = t^-3 exactly, y with y t^4 -> 1 (and z t^5 -> 1 in genus 2).
CurvePoint infinity_parametrization(const FamilyParams& p, cplx t, int genus);

// Nearest-root continuation of y along the contour's polyline.
std::vector<CurvePoint> track_sheet(const FamilyParams& p, const Contour& contour,
                                    int steps_per_edge);

// Geometry of the legs from the base point X0 = R e^{i theta0} to each root.
struct PathGeometry {
  real theta0 = kPi / 2;
  real base_radius = 0;    // 0 selects 3 max(|b1|, |b2|, 1) + 1
  real detour_radius = 0;  // 0 selects max(3|s|, 0.05)
  int arc_segments = 12;
};

// Integrates the differentials along the fixed legs of a curve. The value at
// the base point is regularized so that integrals are measured from infinity
// on the canonical sheet.
class CurveIntegrator {
 public:
  CurveIntegrator(CurveModel model, PathGeometry geometry, QuadratureConfig cfg);

  const CurveModel& model() const { return model_; }
  const QuadratureConfig& config() const { return cfg_; }
  cplx base_x() const { return x0_; }
  cplx base_y() const { return y0_; }
  // Integral of all 2g forms from infinity to (X0, y0).
  const CVec& base_value() const { return base_; }
  real detour_radius() const { return rho_; }

  CVec segment(cplx xa, cplx ya, cplx xb, cplx& yb) const;
  // Straight leg from (xa, ya) into the root, using x = b + tau^3.
  CVec branch_leg(cplx xa, cplx ya, int root) const;
  // First-kind integral from infinity to the point with parameter t.
  CVec from_infinity(cplx t) const;

  std::vector<cplx> leg_vertices(int root) const;
  // Integral of all 2g forms along the canonical leg to the root.
  CVec branch_integral(int root) const;

  struct AbelImage {
    CurvePoint point;
    CVec value;  // 2g entries
  };
  // Straight path from the base point to x on the canonical sheet, then the
  // sheet rotation (x, y) -> (x, zeta^sheet y).
  AbelImage abel(cplx x, int sheet) const;

  // True when the legs leave the base point in the order the cycle tables
  // assume.
  bool legs_in_canonical_order() const;

 private:
  CurveModel model_;
  PathGeometry geom_;
  QuadratureConfig cfg_;
  cplx x0_;
  cplx y0_;
  real rho_ = 0;
  CVec base_;
};

}  // namespace trigonal
