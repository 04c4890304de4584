#include "trigonal/numkernel.hpp"

#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include <boost/math/special_functions/legendre.hpp>

namespace trigonal {

cplx zeta3(int k) {
  const int r = ((k % 3) + 3) % 3;
  if (r == 0) return {1.0L, 0.0L};
  const real c = -0.5L;
  const real sn = std::sqrt(3.0L) / 2.0L;
  return r == 1 ? cplx{c, sn} : cplx{c, -sn};
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::SheetAmbiguity: return "SheetAmbiguity";
    case ErrorCode::AtBranchPoint: return "AtBranchPoint";
    case ErrorCode::OutOfChart: return "OutOfChart";
    case ErrorCode::NotInLattice: return "NotInLattice";
    case ErrorCode::NotHalfPeriod: return "NotHalfPeriod";
    case ErrorCode::AmbiguousCharacteristic: return "AmbiguousCharacteristic";
    case ErrorCode::TruncationOverflow: return "TruncationOverflow";
    case ErrorCode::InvalidParam: return "InvalidParam";
    case ErrorCode::OnLattice: return "OnLattice";
    case ErrorCode::OnThetaDivisor: return "OnThetaDivisor";
    case ErrorCode::LiftFailure: return "LiftFailure";
    case ErrorCode::Pole: return "Pole";
  }
  return "Unknown";
}

NumericError::NumericError(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

void QuadratureConfig::validate() const {
  if (panel_order < 4 || !(tol > 0) || max_subdivision_depth < 1) {
    throw NumericError(ErrorCode::InvalidParam, "invalid quadrature configuration");
  }
}

const GaussRule& gauss_rule(int order) {
  static std::mutex mtx;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it != cache.end()) return *it->second;

  auto rule = std::make_unique<GaussRule>();
  // Boost returns the non-negative zeros in increasing order.
  const auto zeros = boost::math::legendre_p_zeros<real>(order);
  for (real x : zeros) {
    const real dp = boost::math::legendre_p_prime<real>(order, x);
    const real w = 2.0L / ((1.0L - x * x) * dp * dp);
    if (x == 0.0L) {
      rule->nodes.push_back(x);
      rule->weights.push_back(w);
    } else {
      rule->nodes.push_back(x);
      rule->weights.push_back(w);
      rule->nodes.push_back(-x);
      rule->weights.push_back(w);
    }
  }
  auto& ref = *rule;
  cache.emplace(order, std::move(rule));
  return ref;
}

namespace {

CVec apply_rule(const VectorIntegrand& f, real a, real b, Eigen::Index dim,
                const GaussRule& rule) {
  const real mid = 0.5L * (a + b);
  const real half = 0.5L * (b - a);
  CVec acc = CVec::Zero(dim);
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    acc += rule.weights[k] * f(mid + half * rule.nodes[k]);
  }
  return half * acc;
}

real inf_norm(const CVec& v) {
  real m = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

}  // namespace

CVec integrate_param(const VectorIntegrand& f, real a, real b, Eigen::Index dim,
                     const QuadratureConfig& cfg) {
  cfg.validate();
  const GaussRule& lo = gauss_rule(cfg.panel_order);
  const GaussRule& hi = gauss_rule(2 * cfg.panel_order);
  const real total_len = std::abs(b - a);
  if (total_len == 0) return CVec::Zero(dim);

  struct Panel {
    real a, b;
    int depth;
  };
  // The whole-interval estimate sets the scale for panels that are
  // individually tiny.
  const real scale = inf_norm(apply_rule(f, a, b, dim, hi));

  CVec total = CVec::Zero(dim);
  std::vector<Panel> stack{{a, b, 0}};
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const CVec coarse = apply_rule(f, p.a, p.b, dim, lo);
    const CVec fine = apply_rule(f, p.a, p.b, dim, hi);
    const real err = inf_norm(fine - coarse);
    const real share = std::abs(p.b - p.a) / total_len;
    const real target =
        std::max({cfg.tol * inf_norm(fine), cfg.tol * scale * share, cfg.abs_floor});
    if (err <= target) {
      total += fine;
      continue;
    }
    if (p.depth + 1 > cfg.max_subdivision_depth) {
      throw NumericError(ErrorCode::NonConvergence,
                         "quadrature subdivision depth exceeded");
    }
    const real m = 0.5L * (p.a + p.b);
    stack.push_back({m, p.b, p.depth + 1});
    stack.push_back({p.a, m, p.depth + 1});
  }
  return total;
}

cplx integrate_segment(const std::function<cplx(cplx)>& f, cplx a, cplx b,
                       const QuadratureConfig& cfg) {
  const cplx d = b - a;
  auto g = [&](real p) {
    CVec v(1);
    v[0] = f(a + d * p) * d;
    return v;
  };
  return integrate_param(g, 0.0L, 1.0L, 1, cfg)[0];
}

cplx sum_series(const std::function<cplx(int)>& term, real tol, int max_terms) {
  cplx sum = 0;
  int small_run = 0;
  for (int l = 0; l < max_terms; ++l) {
    const cplx t = term(l);
    sum += t;
    if (std::abs(t) <= tol * std::abs(sum)) {
      if (++small_run == 3) return sum;
    } else {
      small_run = 0;
    }
  }
  throw NumericError(ErrorCode::NonConvergence, "series did not converge");
}

real max_abs(const CMat& m) {
  real r = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

cplx small_det(const CMat& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols() || n < 1 || n > 4) {
    throw NumericError(ErrorCode::InvalidParam, "small_det expects a square matrix of size 1..4");
  }
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  cplx det = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    CMat minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const real sign = (j % 2 == 0) ? 1.0L : -1.0L;
    det += sign * m(0, j) * small_det(minor);
  }
  return det;
}

CMat mat_inverse(const CMat& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols() || n < 1 || n > 3) {
    throw NumericError(ErrorCode::InvalidParam, "mat_inverse expects a square matrix of size 1..3");
  }
  real norm = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    real row = 0;
    for (Eigen::Index j = 0; j < n; ++j) row += std::abs(m(i, j));
    norm = std::max(norm, row);
  }
  const cplx det = small_det(m);
  if (!(std::abs(det) >= 1e-14L * std::pow(norm, static_cast<real>(n))) || norm == 0) {
    throw NumericError(ErrorCode::Singular, "matrix is singular");
  }
  CMat inv(n, n);
  if (n == 1) {
    inv(0, 0) = 1.0L / m(0, 0);
    return inv;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      // Cofactor of entry (j, i) gives inverse entry (i, j).
      CMat minor(n - 1, n - 1);
      Eigen::Index rr = 0;
      for (Eigen::Index r = 0; r < n; ++r) {
        if (r == j) continue;
        Eigen::Index cc = 0;
        for (Eigen::Index c = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      const real sign = ((i + j) % 2 == 0) ? 1.0L : -1.0L;
      inv(i, j) = sign * small_det(minor) / det;
    }
  }
  return inv;
}

namespace {

constexpr std::array<real, 15> kLanczos = {
    0.99999999999999709182L,     57.156235665862923517L,      -59.597960355475491248L,
    14.136097974741747174L,      -0.49191381609762019978L,    .33994649984811888699e-4L,
    .46523628927048575665e-4L,   -.98374475304879564677e-4L,  .15808870322491248884e-3L,
    -.21026444172410488319e-3L,  .21743961811521264320e-3L,   -.16431810653676389022e-3L,
    .84418223983852743293e-4L,   -.26190838401581408670e-4L,  .36899182659531622704e-5L};
constexpr real kLanczosG = 607.0L / 128.0L;

cplx lanczos_gamma(cplx z) {
  if (z.real() < 0.5L) {
    return kPi / (std::sin(kPi * z) * lanczos_gamma(1.0L - z));
  }
  const cplx zm = z - 1.0L;
  cplx a = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) {
    a += kLanczos[k] / (zm + static_cast<real>(k));
  }
  const cplx t = zm + kLanczosG + 0.5L;
  const cplx logv = 0.5L * std::log(2.0L * kPi) + (zm + 0.5L) * std::log(t) - t + std::log(a);
  return std::exp(logv);
}

}  // namespace

cplx gamma_fn(cplx z) {
  if (z.imag() == 0 && z.real() <= 0 && std::floor(z.real()) == z.real()) {
    throw NumericError(ErrorCode::Pole, "gamma pole at a nonpositive integer");
  }
  if (z.imag() == 0) return {std::tgamma(z.real()), 0.0L};
  return lanczos_gamma(z);
}

}  // namespace trigonal
