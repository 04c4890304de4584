#pragma once

#include <vector>

#include "trigonal/numkernel.hpp"

namespace trigonal {

// Half-integer characteristic [a; b] with a, b in {0, 1/2}^g.
struct ThetaCharacteristic {
  RVec a;
  RVec b;

  static ThetaCharacteristic zero(int g);
  // 4 a.b mod 2: 0 for even, 1 for odd characteristics.
  int parity() const;
  bool operator==(const ThetaCharacteristic& o) const;
};

// All 4^g half characteristics, a varying slowest.
std::vector<ThetaCharacteristic> all_half_characteristics(int g);

struct ThetaParams {
  CMat tau;
  ThetaCharacteristic ch;
  real tol = 1e-12L;
};

// Riemann theta with characteristics in the classical convention
//   sum_n exp(pi i (n+a)^T tau (n+a) + 2 pi i (n+a)^T (z+b)).
class ThetaFunction {
 public:
  explicit ThetaFunction(const ThetaParams& p);

  struct Jet {
    cplx value;
    CVec grad;
    CMat hess;
    std::vector<CMat> third;  // third[i](j, k) = d^3 / dz_i dz_j dz_k
  };

  int genus() const { return static_cast<int>(tau_.rows()); }
  const CMat& tau() const { return tau_; }
  const ThetaCharacteristic& characteristic() const { return ch_; }
  real radius() const { return radius_; }

  cplx value(const CVec& z) const;
  // Derivatives up to the given order (0..3) by termwise differentiation.
  Jet jet(const CVec& z, int order) const;
  // Same evaluation with the truncation radius enlarged by `extra`.
  cplx value_with_radius(const CVec& z, real extra) const;

 private:
  template <class Visit>
  void enumerate(const CVec& z, real radius, Visit&& visit) const;

  CMat tau_;
  ThetaCharacteristic ch_;
  real tol_;
  RMat imag_inv_;
  RMat chol_upper_;  // Im tau = U^T U
  real radius_ = 0;
};

cplx theta(const CVec& z, const ThetaParams& p);

// Relative defect of theta(z + m + tau n) against the index-shift factor
// exp(2 pi i a.m - pi i n^T tau n - 2 pi i n^T (z + b)) theta(z).
real quasi_periodicity_defect(const CVec& z, const ThetaParams& p, const IVec& m, const IVec& n);

// Plain box sum over |n_i| <= box, used as an oracle.
cplx theta_box_sum(const CVec& z, const CMat& tau, const ThetaCharacteristic& ch, int box);

}  // namespace trigonal
