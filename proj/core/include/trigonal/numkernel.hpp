#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace trigonal {

using real = long double;
using cplx = std::complex<real>;

using CMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;
using CVec = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;
using RMat = Eigen::Matrix<real, Eigen::Dynamic, Eigen::Dynamic>;
using RVec = Eigen::Matrix<real, Eigen::Dynamic, 1>;
using IVec = Eigen::Matrix<long, Eigen::Dynamic, 1>;

inline constexpr real kPi = 3.141592653589793238462643383279502884L;
inline constexpr cplx kI{0.0L, 1.0L};

// Primitive cube root of unity raised to k (any integer k).
cplx zeta3(int k);

enum class ErrorCode {
  NonConvergence,
  Singular,
  SheetAmbiguity,
  AtBranchPoint,
  OutOfChart,
  NotInLattice,
  NotHalfPeriod,
  AmbiguousCharacteristic,
  TruncationOverflow,
  InvalidParam,
  OnLattice,
  OnThetaDivisor,
  LiftFailure,
  Pole,
};

const char* to_string(ErrorCode code);

class NumericError : public std::runtime_error {
 public:
  NumericError(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct QuadratureConfig {
  int panel_order = 16;
  real tol = 1e-15L;
  int max_subdivision_depth = 40;
  // Panels whose error estimate falls below this are accepted outright.
  real abs_floor = 1e-30L;

  void validate() const;
};

// Gauss-Legendre nodes and weights on [-1, 1]; cached per order.
struct GaussRule {
  std::vector<real> nodes;
  std::vector<real> weights;
};
const GaussRule& gauss_rule(int order);

using VectorIntegrand = std::function<CVec(real)>;

// Adaptive integral of a vector-valued function of a real parameter over
// [a, b]. Each panel compares the order-n and order-2n rules; panels that
// disagree are bisected.
CVec integrate_param(const VectorIntegrand& f, real a, real b, Eigen::Index dim,
                     const QuadratureConfig& cfg);

// Integral of f along the straight segment from a to b.
cplx integrate_segment(const std::function<cplx(cplx)>& f, cplx a, cplx b,
                       const QuadratureConfig& cfg);

// Sums term(0) + term(1) + ... until three consecutive terms are below
// tol * |partial sum|.
cplx sum_series(const std::function<cplx(int)>& term, real tol, int max_terms);

// Inverse of a 1x1, 2x2 or 3x3 matrix by cofactors.
CMat mat_inverse(const CMat& m);

// Determinant of a square matrix of size at most 4, by cofactor expansion.
cplx small_det(const CMat& m);

// Gamma function; Lanczos approximation off the real axis, libm on it.
cplx gamma_fn(cplx z);

real max_abs(const CMat& m);

// Bilinear pairing sum_i a_i b_i (Eigen's dot conjugates its first argument).
inline cplx bdot(const CVec& a, const CVec& b) { return (a.array() * b.array()).sum(); }

}  // namespace trigonal
