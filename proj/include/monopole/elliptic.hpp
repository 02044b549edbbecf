#pragma once

// Legendre elliptic integrals of the first kind, Jacobi elliptic
// functions and the descending Landen map. The modulus is the Legendre
// modulus kappa (not the parameter kappa^2).

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "monopole/errors.hpp"

namespace monopole {

namespace detail {

inline void require_modulus(double kappa, const char* who) {
  if (!(kappa >= 0.0 && kappa < 1.0)) {
    std::ostringstream os;
    os << who << ": modulus " << kappa << " outside [0, 1)";
    throw DomainError(os.str());
  }
}

// Complementary modulus sqrt(1 - kappa^2) without cancellation near 1.
inline double complementary(double kappa) { return std::sqrt((1.0 - kappa) * (1.0 + kappa)); }

}  // namespace detail

inline double agm(double a, double b) {
  for (int i = 0; i < 64; ++i) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    if (std::abs(an - bn) <= 1e-16 * an) return an;
    a = an;
    b = bn;
  }
  return a;
}

/// Carlson's symmetric integral R_F(x, y, z) for nonnegative arguments,
/// at most one of which is zero.
inline double carlson_rf(double x, double y, double z) {
  if (x < 0 || y < 0 || z < 0 || (x == 0 && y == 0) || (x == 0 && z == 0) || (y == 0 && z == 0)) {
    throw DomainError("carlson_rf: invalid arguments");
  }
  for (int i = 0; i < 200; ++i) {
    const double a = (x + y + z) / 3.0;
    const double dx = 1.0 - x / a;
    const double dy = 1.0 - y / a;
    const double dz = 1.0 - z / a;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < 1e-3) {
      const double e2 = dx * dy - dz * dz;
      const double e3 = dx * dy * dz;
      return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / std::sqrt(a);
    }
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lambda = sx * sy + sx * sz + sy * sz;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
  }
  throw NumericError("carlson_rf: duplication did not converge");
}

/// Complete integral K(kappa) by the arithmetic-geometric mean.
inline double complete_K(double kappa) {
  detail::require_modulus(kappa, "complete_K");
  return std::numbers::pi / (2.0 * agm(1.0, detail::complementary(kappa)));
}

/// Incomplete integral F(phi, kappa) for 0 <= phi <= pi/2.
inline double incomplete_F(double phi, double kappa) {
  detail::require_modulus(kappa, "incomplete_F");
  if (!(phi >= 0.0 && phi <= std::numbers::pi / 2 + 1e-15)) {
    std::ostringstream os;
    os << "incomplete_F: amplitude " << phi << " outside [0, pi/2]";
    throw DomainError(os.str());
  }
  if (phi == 0.0) return 0.0;
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  return s * carlson_rf(c * c, (1.0 - kappa * s) * (1.0 + kappa * s), 1.0);
}

struct JacobiValues {
  double sn = 0.0;
  double cn = 1.0;
  double dn = 1.0;
};

/// sn, cn, dn by the descending Landen (AGM) scheme.
inline JacobiValues jacobi_sncndn(double u, double kappa) {
  detail::require_modulus(kappa, "jacobi_sncndn");
  if (!std::isfinite(u)) throw DomainError("jacobi_sncndn: non-finite argument");
  const double kp = detail::complementary(kappa);
  if (kappa == 0.0) return {std::sin(u), std::cos(u), 1.0};

  // sn and cn have period 4K; reducing keeps the phase small.
  const double period = 4.0 * complete_K(kappa);
  u -= period * std::nearbyint(u / period);

  std::array<double, 64> a{}, c{};
  a[0] = 1.0;
  double b = kp;
  c[0] = kappa;
  int n = 0;
  while (std::abs(c[n]) > 1e-16 * a[n] && n < 62) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * u, n);
  for (int i = n; i > 0; --i) {
    phi = 0.5 * (phi + std::asin(c[i] / a[i] * std::sin(phi)));
  }
  JacobiValues v;
  v.sn = std::sin(phi);
  v.cn = std::cos(phi);
  // dn^2 = kappa'^2 + kappa^2 cn^2 is a sum of nonnegative terms.
  v.dn = std::sqrt(kp * kp + kappa * kappa * v.cn * v.cn);
  return v;
}

/// Descending Landen map: the kappa in (0, k) with k = 2 sqrt(kappa)/(1 + kappa).
inline double landen_descend(double k) {
  if (!(k > 0.0 && k < 1.0)) {
    std::ostringstream os;
    os << "landen_descend: modulus " << k << " outside (0, 1)";
    throw DomainError(os.str());
  }
  const double kp = detail::complementary(k);
  const double s = k / (1.0 + kp);
  return s * s;
}

/// Ascending image of landen_descend: k = 2 sqrt(kappa)/(1 + kappa).
inline double landen_ascend(double kappa) {
  if (!(kappa > 0.0 && kappa < 1.0)) throw DomainError("landen_ascend: modulus outside (0, 1)");
  return 2.0 * std::sqrt(kappa) / (1.0 + kappa);
}

}  // namespace monopole
