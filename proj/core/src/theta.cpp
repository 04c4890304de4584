#include "trigonal/theta.hpp"

#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

namespace trigonal {

ThetaCharacteristic ThetaCharacteristic::zero(int g) {
  return {RVec::Zero(g), RVec::Zero(g)};
}

int ThetaCharacteristic::parity() const {
  const real d = 4.0L * a.dot(b);
  return static_cast<int>(std::llround(d)) % 2 == 0 ? 0 : 1;
}

bool ThetaCharacteristic::operator==(const ThetaCharacteristic& o) const {
  return a.size() == o.a.size() && (a - o.a).cwiseAbs().maxCoeff() < 1e-12L &&
         (b - o.b).cwiseAbs().maxCoeff() < 1e-12L;
}

std::vector<ThetaCharacteristic> all_half_characteristics(int g) {
  std::vector<ThetaCharacteristic> out;
  const int n = 1 << g;
  for (int ia = 0; ia < n; ++ia) {
    for (int ib = 0; ib < n; ++ib) {
      ThetaCharacteristic c = ThetaCharacteristic::zero(g);
      for (int k = 0; k < g; ++k) {
        // Most significant bit first so that a = (0, 0, 1/2) follows (0, 0, 0).
        c.a[k] = ((ia >> (g - 1 - k)) & 1) ? 0.5L : 0.0L;
        c.b[k] = ((ib >> (g - 1 - k)) & 1) ? 0.5L : 0.0L;
      }
      out.push_back(c);
    }
  }
  return out;
}

namespace {

// Tail bound for the Gaussian lattice sum outside radius r, for a lattice
// whose shortest vector has length at least rho (exponent -|x|^2).
real tail_bound(int g, real rho, real r) {
  const real shifted = r - rho / 2;
  if (shifted <= 0) return 1e300L;
  const real half_g = static_cast<real>(g) / 2;
  return half_g * std::pow(2.0L / rho, static_cast<real>(g)) *
         boost::math::tgamma(half_g, shifted * shifted);
}

}  // namespace

ThetaFunction::ThetaFunction(const ThetaParams& p) : ch_(p.ch), tol_(p.tol) {
  const Eigen::Index g = p.tau.rows();
  if (g < 1 || p.tau.cols() != g || ch_.a.size() != g || ch_.b.size() != g) {
    throw NumericError(ErrorCode::InvalidParam, "theta parameters have inconsistent sizes");
  }
  tau_ = 0.5L * (p.tau + p.tau.transpose());
  const RMat im = tau_.imag();
  Eigen::LLT<RMat> llt(im);
  if (llt.info() != Eigen::Success) {
    throw NumericError(ErrorCode::InvalidParam, "imaginary part of tau is not positive definite");
  }
  chol_upper_ = llt.matrixU();
  imag_inv_ = llt.solve(RMat::Identity(g, g));

  Eigen::SelfAdjointEigenSolver<RMat> eig(im);
  const real lam = eig.eigenvalues().minCoeff();
  const real rho = std::sqrt(kPi * lam);
  // Derivative weights grow polynomially, so the bound is applied with a
  // margin below the requested tolerance.
  const real target = tol_ * 1e-3L;
  real r = (std::sqrt(static_cast<real>(g)) + rho) / 2 + 0.05L;
  while (tail_bound(static_cast<int>(g), rho, r) > target) {
    r += 0.05L;
    if (r > 200.0L * std::max(rho, 1.0L)) {
      throw NumericError(ErrorCode::TruncationOverflow, "theta truncation radius exceeds the hard cap");
    }
  }
  radius_ = r;
}

template <class Visit>
void ThetaFunction::enumerate(const CVec& z, real radius, Visit&& visit) const {
  const int g = genus();
  RVec center = imag_inv_ * z.imag();  // peak of the Gaussian at v = -center
  RVec shift = ch_.a + center;         // x = n + shift
  const real budget = radius * radius / kPi;

  std::vector<long> n(g, 0);
  RVec x(g);
  // Recursive descent from the last coordinate, as in Fincke-Pohst.
  auto rec = [&](auto&& self, int i, real used) -> void {
    real t = 0;
    for (int j = i + 1; j < g; ++j) t += chol_upper_(i, j) * x[j];
    const real uii = chol_upper_(i, i);
    const real rem = budget - used;
    if (rem < 0) return;
    const real half_width = std::sqrt(rem) / uii;
    const real mid = -t / uii - shift[i];
    const long lo = static_cast<long>(std::ceil(mid - half_width));
    const long hi = static_cast<long>(std::floor(mid + half_width));
    for (long k = lo; k <= hi; ++k) {
      n[i] = k;
      x[i] = static_cast<real>(k) + shift[i];
      const real lin = uii * x[i] + t;
      const real used_here = used + lin * lin;
      if (i == 0) {
        RVec v(g);
        for (int j = 0; j < g; ++j) v[j] = static_cast<real>(n[j]) + ch_.a[j];
        visit(v);
      } else {
        self(self, i - 1, used_here);
      }
    }
  };
  rec(rec, g - 1, 0.0L);
}

cplx ThetaFunction::value(const CVec& z) const { return value_with_radius(z, 0.0L); }

cplx ThetaFunction::value_with_radius(const CVec& z, real extra) const {
  const int g = genus();
  if (z.size() != g) throw NumericError(ErrorCode::InvalidParam, "theta argument has the wrong size");
  const CVec zb = z + ch_.b.cast<cplx>();
  cplx sum = 0;
  enumerate(z, radius_ + extra, [&](const RVec& v) {
    const CVec vc = v.cast<cplx>();
    const cplx e = kI * kPi * bdot(vc, tau_ * vc) + 2.0L * kI * kPi * bdot(vc, zb);
    sum += std::exp(e);
  });
  return sum;
}

ThetaFunction::Jet ThetaFunction::jet(const CVec& z, int order) const {
  const int g = genus();
  if (z.size() != g) throw NumericError(ErrorCode::InvalidParam, "theta argument has the wrong size");
  if (order < 0 || order > 3) throw NumericError(ErrorCode::InvalidParam, "jet order must be 0..3");
  Jet out;
  out.value = 0;
  out.grad = CVec::Zero(g);
  out.hess = CMat::Zero(g, g);
  if (order >= 3) out.third.assign(g, CMat::Zero(g, g));
  const CVec zb = z + ch_.b.cast<cplx>();
  enumerate(z, radius_, [&](const RVec& v) {
    const CVec vc = v.cast<cplx>();
    const cplx e = std::exp(kI * kPi * bdot(vc, tau_ * vc) + 2.0L * kI * kPi * bdot(vc, zb));
    out.value += e;
    if (order >= 1) {
      const CVec w = (2.0L * kI * kPi) * vc;
      out.grad += e * w;
      if (order >= 2) {
        const CMat ww = w * w.transpose();
        out.hess += e * ww;
        if (order >= 3) {
          for (int i = 0; i < g; ++i) out.third[i] += (e * w[i]) * ww;
        }
      }
    }
  });
  return out;
}

cplx theta(const CVec& z, const ThetaParams& p) { return ThetaFunction(p).value(z); }

real quasi_periodicity_defect(const CVec& z, const ThetaParams& p, const IVec& m, const IVec& n) {
  const ThetaFunction th(p);
  const CMat& tau = th.tau();
  const CVec mc = m.cast<real>().cast<cplx>();
  const CVec nc = n.cast<real>().cast<cplx>();
  const cplx lhs = th.value(z + mc + tau * nc);
  const CVec zb = z + p.ch.b.cast<cplx>();
  const cplx phase = std::exp(2.0L * kI * kPi * bdot(p.ch.a.cast<cplx>(), mc) -
                              kI * kPi * bdot(nc, tau * nc) - 2.0L * kI * kPi * bdot(nc, zb));
  const cplx rhs = phase * th.value(z);
  return std::abs(lhs - rhs) / std::max(std::abs(rhs), std::abs(lhs));
}

cplx theta_box_sum(const CVec& z, const CMat& tau, const ThetaCharacteristic& ch, int box) {
  const int g = static_cast<int>(tau.rows());
  const CMat ts = 0.5L * (tau + tau.transpose());
  const CVec zb = z + ch.b.cast<cplx>();
  std::vector<long> n(g, -box);
  cplx sum = 0;
  for (;;) {
    CVec v(g);
    for (int j = 0; j < g; ++j) v[j] = static_cast<real>(n[j]) + ch.a[j];
    sum += std::exp(kI * kPi * bdot(v, ts * v) + 2.0L * kI * kPi * bdot(v, zb));
    int k = 0;
    while (k < g && n[k] == box) n[k++] = -box;
    if (k == g) break;
    ++n[k];
  }
  return sum;
}

}  // namespace trigonal
