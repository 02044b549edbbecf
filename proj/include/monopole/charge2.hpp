#pragma once

// Spectral curves of centred hyperbolic 2-monopoles as functions of the
// mass m and the modulus kappa, their parameter chain, the triviality
// (reciprocity) check and the limiting curves.

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <vector>

#include <Eigen/SVD>

#include "monopole/curve.hpp"
#include "monopole/elliptic.hpp"
#include "monopole/errors.hpp"
#include "monopole/quadrature.hpp"

namespace monopole {

namespace detail {

inline void require_mass(double m) {
  if (!(m >= 0.0) || !std::isfinite(m)) {
    std::ostringstream os;
    os << "mass " << m << " must be finite and nonnegative";
    throw DomainError(os.str());
  }
}

}  // namespace detail

/// Star of the point (x1, x2, x3) of hyperbolic space (upper half-space
/// model): the (1,1) curve of geodesics through it,
/// (x1 - i x2) w z - |x|^2 w + z - (x1 + i x2) = 0.
inline BidegreeCurve star_line(double x1, double x2, double x3) {
  if (!(x3 > 0.0)) throw DomainError("star_line: x3 must be positive");
  BidegreeCurve s(1);
  s(1, 1) = {x1, -x2};
  s(1, 0) = -(x1 * x1 + x2 * x2 + x3 * x3);
  s(0, 1) = 1.0;
  s(0, 0) = {-x1, -x2};
  return s;
}

/// The symmetric (2,2) curve a (w^2 z^2 + 1) + b w z + c (w^2 + z^2).
inline BidegreeCurve charge2_curve(double a, double b, double c) {
  BidegreeCurve s(2);
  s(2, 2) = a;
  s(0, 0) = a;
  s(1, 1) = b;
  s(2, 0) = c;
  s(0, 2) = c;
  return s;
}

/// kappa sn^2(rho) (w^2 z^2 + 1) + 2 cn(rho) dn(rho) w z - (w^2 + z^2),
/// rho = K(kappa)/(m+1). The boundaries kappa = 0 and m = 0 use their
/// closed forms.
inline BidegreeCurve curve_from_mass(double m, double kappa) {
  detail::require_mass(m);
  detail::require_modulus(kappa, "curve_from_mass");
  if (kappa == 0.0) return charge2_curve(0.0, 2.0 * std::cos(std::numbers::pi / (2.0 * (m + 1.0))), -1.0);
  if (m == 0.0) return charge2_curve(kappa, 0.0, -1.0);
  const double rho = complete_K(kappa) / (m + 1.0);
  const JacobiValues j = jacobi_sncndn(rho, kappa);
  return charge2_curve(kappa * j.sn * j.sn, 2.0 * j.cn * j.dn, -1.0);
}

/// Parameter chain (m, kappa) -> rho -> (u, v, lambda, Lambda^2, alpha, beta).
struct Charge2Derived {
  double m = 0.0;
  double kappa = 0.0;
  double rho = 0.0;
  double u = 0.0;
  double v = 0.0;
  double lambda = 0.0;
  double Lambda_sq = 0.0;
  double alpha = 0.0;
  double beta = 0.0;

  /// lambda + 1/lambda = (uv - 4)/(u - v).
  double lambda_sum() const { return (u * v - 4.0) / (u - v); }
};

inline Charge2Derived derived_params(double m, double kappa) {
  detail::require_mass(m);
  detail::require_modulus(kappa, "derived_params");
  if (kappa == 0.0) throw DomainError("derived_params: alpha is undefined at kappa = 0; use limit_axial");
  Charge2Derived d;
  d.m = m;
  d.kappa = kappa;
  const double K = complete_K(kappa);
  d.rho = K / (m + 1.0);
  const double sn_half = jacobi_sncndn(K / (2.0 * (m + 1.0)), kappa).sn;
  d.alpha = 1.0 / (kappa * sn_half * sn_half);
  d.u = d.alpha + 1.0 / d.alpha;
  d.v = kappa + 1.0 / kappa;
  const double s = d.lambda_sum();
  d.lambda = (s - std::sqrt((s - 2.0) * (s + 2.0))) / 2.0;
  d.Lambda_sq = (d.u * d.u - 2.0 * d.u * d.v + 4.0) / (2.0 * (d.u - d.v));
  d.beta = std::sqrt((d.u - d.v) / d.alpha);
  return d;
}

/// Periods entering the reciprocity law, from direct quadrature of
/// dt/sqrt(F(t)) with F(t) = 4 alpha (t^4 - v t^2 + 1).
struct Charge2Verification {
  double I1 = 0.0;
  double I2 = 0.0;
  double a_period = 0.0;  // oint_a omega / i
  double mass_residual = 0.0;
  int ell1 = 0;
  int ell2 = 0;
  double ell_residual = 0.0;
};

inline Charge2Verification verify_triviality(double m, double kappa) {
  const Charge2Derived d = derived_params(m, kappa);
  const double rk = std::sqrt(kappa), irk = 1.0 / rk, ra = std::sqrt(d.alpha);
  const double a4 = 4.0 * d.alpha;
  // On |t| < sqrt(kappa): F = 4 alpha (kappa - t^2)(1/kappa - t^2).
  auto f1 = [&](double t, double dl, double dr) { return 1.0 / std::sqrt(a4 * dl * dr * (irk - t) * (irk + t)); };
  // On (1/sqrt(kappa), sqrt(alpha)): F = 4 alpha (t^2 - kappa)(t^2 - 1/kappa).
  auto f2 = [&](double t, double dl, double) { return 1.0 / std::sqrt(a4 * (t - rk) * (t + rk) * dl * (t + irk)); };
  // On (sqrt(kappa), 1/sqrt(kappa)) F < 0.
  auto fa = [&](double t, double dl, double dr) { return 1.0 / std::sqrt(a4 * dl * (t + rk) * dr * (t + irk)); };
  Charge2Verification r;
  r.I1 = tanh_sinh(f1, -rk, rk).value;
  r.I2 = tanh_sinh(f2, irk, ra).value;
  r.a_period = 2.0 * tanh_sinh(fa, rk, irk).value;
  // I1 = sqrt(kappa/alpha) K and I1 - 2 I2 = sqrt(kappa/alpha) F(arcsin(1/sqrt(alpha kappa))).
  const double scale = std::sqrt(d.alpha / kappa);
  r.mass_residual = scale * (r.I1 - 2.0 * r.I2) - scale * r.I1 / (2.0 * (m + 1.0));
  // Reciprocity: ell1 oint_a + ell2 oint_b = 2(m+1)(int_gamma1 + int_gamma2) with
  // oint_b = -2 I1 and the right side 2(m+1)(2 I1 - 4 I2), all real except the
  // imaginary a-period, so ell1 = 0.
  const double raw = -2.0 * (m + 1.0) * (r.I1 - 2.0 * r.I2) / r.I1;
  r.ell1 = 0;
  r.ell2 = static_cast<int>(std::lround(raw));
  r.ell_residual = std::abs(raw - r.ell2);
  if (r.ell_residual >= 1e-6) {
    std::ostringstream os;
    os << "verify_triviality: cycle coefficient " << raw << " is not an integer";
    throw IntegrityError(os.str());
  }
  return r;
}

/// w^2 - 2 cos(pi/(2(m+1))) w z + z^2.
inline BidegreeCurve limit_axial(double m) {
  detail::require_mass(m);
  return charge2_curve(0.0, -2.0 * std::cos(std::numbers::pi / (2.0 * (m + 1.0))), 1.0);
}

/// kappa (w^2 z^2 + 1) - (w^2 + z^2).
inline BidegreeCurve limit_nullaron(double kappa) {
  detail::require_modulus(kappa, "limit_nullaron");
  return charge2_curve(kappa, 0.0, -1.0);
}

/// (w^2 - 1)(z^2 - 1).
inline BidegreeCurve limit_separation() { return charge2_curve(1.0, 0.0, -1.0); }

/// Euclidean limit eta^2 + q(zeta) = 0 in two parametrisations:
/// q = -K(kappa)^2 (zeta^2 - kappa)(kappa zeta^2 - 1) and
/// q = -K(k)^2/4 (k^2 (zeta^4 + 1) - 2(2 - k^2) zeta^2), k = 2 sqrt(kappa)/(1+kappa).
struct EuclidCharge2 {
  double kappa = 0.0;
  double k = 0.0;
  std::vector<double> limit_form;     // coefficients of q, zeta^0..zeta^4
  std::vector<double> standard_form;  // same, from the second parametrisation
  double max_deviation = 0.0;
  std::vector<double> branch_points;  // +-sqrt(kappa), +-1/sqrt(kappa), ascending
};

inline EuclidCharge2 euclid_limit_charge2(double kappa) {
  detail::require_modulus(kappa, "euclid_limit_charge2");
  if (kappa == 0.0) throw DomainError("euclid_limit_charge2: kappa must be positive");
  EuclidCharge2 e;
  e.kappa = kappa;
  e.k = landen_ascend(kappa);
  const double K = complete_K(kappa), K2 = K * K;
  e.limit_form = {-K2 * kappa, 0.0, K2 * (1.0 + kappa * kappa), 0.0, -K2 * kappa};
  const double Kk = complete_K(e.k), k2 = e.k * e.k;
  const double s = -Kk * Kk / 4.0;
  e.standard_form = {s * k2, 0.0, -2.0 * s * (2.0 - k2), 0.0, s * k2};
  for (int i = 0; i <= 4; ++i) {
    e.max_deviation = std::max(e.max_deviation, std::abs(e.limit_form[i] - e.standard_form[i]));
  }
  const double r = std::sqrt(kappa);
  e.branch_points = {-1.0 / r, -r, r, 1.0 / r};
  return e;
}

/// Spectral curve of the massless monopole with rational map R = numer/denom
/// of degree k (coefficients low to high): numer(w) numer*(z) + denom(w) denom*(z),
/// where p*(z) = z^k conj(p(-1/conj z)). Normalized so the largest entry is 1.
inline BidegreeCurve nullaron_from_rational_map(const std::vector<std::complex<double>>& numer,
                                                const std::vector<std::complex<double>>& denom) {
  auto degree = [](const std::vector<std::complex<double>>& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[d] == 0.0) --d;
    return d;
  };
  const int dn = degree(numer), dd = degree(denom);
  if (dn < 0 || dd < 0) throw DomainError("nullaron_from_rational_map: zero polynomial");
  const int k = std::max(dn, dd);
  if (k < 1) throw DomainError("nullaron_from_rational_map: constant map");
  // Common factor check: the resultant vanishes iff the Sylvester matrix is singular.
  {
    const int n = dn + dd;
    if (dn > 0 && dd > 0) {
      Eigen::MatrixXcd syl = Eigen::MatrixXcd::Zero(n, n);
      for (int r = 0; r < dd; ++r) {
        for (int i = 0; i <= dn; ++i) syl(r, r + dn - i) = numer[i];
      }
      for (int r = 0; r < dn; ++r) {
        for (int i = 0; i <= dd; ++i) syl(dd + r, r + dd - i) = denom[i];
      }
      const auto sv = syl.jacobiSvd().singularValues();
      if (sv(n - 1) <= 1e-12 * sv(0)) throw DomainError("nullaron_from_rational_map: numerator and denominator share a factor");
    }
  }
  const auto ns = reality_dual(numer, k), ds = reality_dual(denom, k);
  BidegreeCurve s(k);
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) {
      const std::complex<double> a = i <= dn ? numer[i] : 0.0;
      const std::complex<double> b = i <= dd ? denom[i] : 0.0;
      s(i, j) = a * ns[j] + b * ds[j];
    }
  }
  return s.normalized();
}

}  // namespace monopole
