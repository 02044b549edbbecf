#pragma once

// Weierstrass elliptic functions for real invariants (g2, g3): the roots of
// 4x^3 - g2 x - g3, half-periods, the period lattice and the function
// p(u) itself (Laurent series near the origin plus duplication).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

#include "monopole/errors.hpp"
#include "monopole/quadrature.hpp"

namespace monopole {

using cplx = std::complex<double>;

class EllipticInvariants {
 public:
  EllipticInvariants(double g2, double g3) : g2_(g2), g3_(g3) {
    if (!std::isfinite(g2) || !std::isfinite(g3)) throw DomainError("elliptic invariants must be finite");
    const double scale = std::max(std::abs(g2 * g2 * g2), 27.0 * g3 * g3);
    if (scale == 0.0 || std::abs(discriminant()) <= 1e-13 * scale) {
      std::ostringstream os;
      os << "degenerate cubic: g2=" << g2 << ", g3=" << g3 << " has zero discriminant";
      throw DomainError(os.str());
    }
  }
  double g2() const { return g2_; }
  double g3() const { return g3_; }
  double discriminant() const { return g2_ * g2_ * g2_ - 27.0 * g3_ * g3_; }
  template <class T>
  T cubic(const T& x) const {
    return (4.0 * x * x - g2_) * x - g3_;
  }
  // Quotient of the cubic by (x - r) for a root r.
  template <class T>
  T deflated(const T& x, double r) const {
    return 4.0 * x * x + 4.0 * r * x + (4.0 * r * r - g2_);
  }

 private:
  double g2_;
  double g3_;
};

enum class RootConfiguration { ConjugatePair, AllReal };

/// Roots of 4x^3 - g2 x - g3. In the conjugate configuration e2 is the
/// real root and Im e1 > 0, e3 = conj(e1). In the all-real
/// configuration e1 > e2 > e3.
struct CubicRoots {
  cplx e1;
  double e2 = 0.0;
  cplx e3;
  RootConfiguration configuration = RootConfiguration::ConjugatePair;
};

inline CubicRoots cubic_roots(const EllipticInvariants& inv) {
  const double p = -inv.g2() / 4.0;
  const double q = -inv.g3() / 4.0;
  const double d = q * q / 4.0 + p * p * p / 27.0;
  auto polish_real = [&](double x) {
    for (int i = 0; i < 4; ++i) {
      const double fx = inv.cubic(x);
      const double dfx = 12.0 * x * x - inv.g2();
      if (dfx == 0.0) break;
      const double dx = fx / dfx;
      x -= dx;
      if (std::abs(dx) <= 1e-17 * std::max(1.0, std::abs(x))) break;
    }
    return x;
  };
  CubicRoots r;
  if (d > 0.0) {
    // One real root (Cardano, choosing the sign that avoids cancellation).
    const double s = std::sqrt(d);
    const double t = -q / 2.0 + (q <= 0.0 ? s : -s);
    const double uu = std::cbrt(t);
    const double x = uu == 0.0 ? 0.0 : uu - p / (3.0 * uu);
    const double e2 = polish_real(x);
    const double re = -e2 / 2.0;
    const double im = std::sqrt(std::max(0.0, 3.0 * e2 * e2 + 4.0 * p)) / 2.0;
    cplx e1(re, im);
    for (int i = 0; i < 3; ++i) {
      const cplx fx = inv.cubic(e1);
      const cplx dfx = 12.0 * e1 * e1 - inv.g2();
      e1 -= fx / dfx;
    }
    r.e1 = cplx(e1.real(), std::abs(e1.imag()));
    r.e2 = e2;
    r.e3 = std::conj(r.e1);
    r.configuration = RootConfiguration::ConjugatePair;
  } else {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    std::array<double, 3> x{};
    for (int k = 0; k < 3; ++k) x[k] = polish_real(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0));
    std::sort(x.begin(), x.end(), std::greater<>());
    r.e1 = x[0];
    r.e2 = x[1];
    r.e3 = x[2];
    r.configuration = RootConfiguration::AllReal;
  }
  return r;
}

namespace detail {

// Integral of 2 ds / sqrt(Q(r + sign*s^2)) over s in [s0, s1] (s1 may be
// infinite), where Q is the deflated cubic at the real root r. This is
// the common smooth form of all real-axis period integrals.
inline double deflated_integral(const EllipticInvariants& inv, double r, double sign, double s0,
                                double s1) {
  auto q_at = [&](double s) { return inv.deflated(r + sign * s * s, r); };
  if (std::isinf(s1)) {
    // s = s0 + t/(1-t); the integrand decays like 1/s^2.
    auto f = [&](double, double t, double one_minus_t) {
      const double ws = one_minus_t * s0 + t;  // (1-t) s, finite as t -> 1
      if (ws <= one_minus_t) {
        const double s = ws / one_minus_t;
        return 2.0 / (one_minus_t * one_minus_t * std::sqrt(q_at(s)));
      }
      // Q / s^4 in terms of y = 1/s^2, avoiding overflow of s near t = 1.
      const double y = (one_minus_t / ws) * (one_minus_t / ws);
      const double b = r * y + sign;
      const double qn = 4.0 * b * b + 4.0 * r * b * y + (4.0 * r * r - inv.g2()) * y * y;
      return 2.0 / (ws * ws * std::sqrt(qn));
    };
    return tanh_sinh(f, 0.0, 1.0).value;
  }
  auto f = [&](double s) { return 2.0 / std::sqrt(q_at(s)); };
  return tanh_sinh(f, s0, s1).value;
}

inline double real_root_for_left_integrals(const CubicRoots& roots) {
  return roots.configuration == RootConfiguration::ConjugatePair ? roots.e2 : roots.e3.real();
}

}  // namespace detail

/// Integral of dx/sqrt(F(x)) from the real root e to +infinity, where F > 0
/// on (e, infinity): e must be e2 (conjugate case) or e1 (all-real case).
inline double integral_root_to_infinity(const EllipticInvariants& inv, double e) {
  return detail::deflated_integral(inv, e, 1.0, 0.0, INFINITY);
}

/// Integral of dx/sqrt(-F(x)) over (-infinity, x] for x at or left of the
/// smallest real root, where -F > 0.
inline double integral_minus_infinity_to(const EllipticInvariants& inv, double x) {
  const CubicRoots roots = cubic_roots(inv);
  const double r = detail::real_root_for_left_integrals(roots);
  if (x > r + 1e-14 * std::max(1.0, std::abs(r))) {
    throw DomainError("integral_minus_infinity_to: endpoint right of the real root");
  }
  const double s0 = std::sqrt(std::max(0.0, r - x));
  return detail::deflated_integral(inv, r, -1.0, s0, INFINITY);
}

/// Integral of dx/sqrt(-F(x)) over [x, r] where r is the smallest real root.
inline double integral_to_root(const EllipticInvariants& inv, double x) {
  const CubicRoots roots = cubic_roots(inv);
  const double r = detail::real_root_for_left_integrals(roots);
  if (x > r) throw DomainError("integral_to_root: endpoint right of the real root");
  return detail::deflated_integral(inv, r, -1.0, 0.0, std::sqrt(r - x));
}

struct HalfPeriods {
  double varpi = 0.0;
  cplx varpi_prime;
  cplx varpi1;
};

/// varpi = int_{e2}^{inf} dx/sqrt(F); varpi' = -i int_{e2}^{e1} dx/sqrt(-F)
/// along the straight segment with the principal square root;
/// varpi1 = 2 varpi' - varpi.
inline HalfPeriods half_periods(const EllipticInvariants& inv) {
  const CubicRoots roots = cubic_roots(inv);
  if (roots.configuration != RootConfiguration::ConjugatePair || roots.e2 <= 0.0) {
    std::ostringstream os;
    os << "half_periods: need one positive real root and a conjugate pair (g2=" << inv.g2()
       << ", g3=" << inv.g3() << ")";
    throw ConfigurationError(os.str());
  }
  HalfPeriods hp;
  hp.varpi = integral_root_to_infinity(inv, roots.e2);
  const cplx d = roots.e1 - roots.e2;
  const cplx e2_minus_e3 = roots.e2 - roots.e3;
  auto f = [&](double tau, double dl, double dr) {
    // -F(x) = -4 (x-e1)(x-e2)(x-e3) with x - e2 = tau d, x - e1 = -(1-tau) d.
    const cplx minus_f = 4.0 * dl * dr * d * d * (e2_minus_e3 + tau * d);
    return d / std::sqrt(minus_f);
  };
  const cplx seg = tanh_sinh(f, 0.0, 1.0).value;
  hp.varpi_prime = cplx(0.0, -1.0) * seg;
  hp.varpi1 = 2.0 * hp.varpi_prime - hp.varpi;
  return hp;
}

/// Period lattice generated by omega_a and omega_b, with a Lagrange-reduced
/// basis (|omega_a| <= |omega_b|, |omega_a| the minimal vector length).
struct PeriodLattice {
  cplx omega_a;
  cplx omega_b;

  cplx reduce(cplx u) const {
    const double det = omega_a.real() * omega_b.imag() - omega_a.imag() * omega_b.real();
    const double x = (u.real() * omega_b.imag() - u.imag() * omega_b.real()) / det;
    const double y = (omega_a.real() * u.imag() - omega_a.imag() * u.real()) / det;
    u -= std::nearbyint(x) * omega_a + std::nearbyint(y) * omega_b;
    cplx best = u;
    for (int i = -1; i <= 1; ++i) {
      for (int j = -1; j <= 1; ++j) {
        const cplx v = u - double(i) * omega_a - double(j) * omega_b;
        if (std::abs(v) < std::abs(best)) best = v;
      }
    }
    return best;
  }
  double min_length() const { return std::abs(omega_a); }
};

inline PeriodLattice lagrange_reduce(cplx a, cplx b) {
  if (std::abs(a) > std::abs(b)) std::swap(a, b);
  for (int i = 0; i < 100; ++i) {
    const double mu = (b * std::conj(a)).real() / std::norm(a);
    b -= std::nearbyint(mu) * a;
    if (std::abs(b) >= std::abs(a)) break;
    std::swap(a, b);
  }
  return {a, b};
}

/// Lattice from real-axis integrals: 2*varpi and varpi + varpi1 in the
/// conjugate case, 2*omega1 and 2*omega3 in the all-real case.
inline PeriodLattice period_lattice(const EllipticInvariants& inv) {
  const CubicRoots roots = cubic_roots(inv);
  if (roots.configuration == RootConfiguration::ConjugatePair) {
    const double w = integral_root_to_infinity(inv, roots.e2);
    const double t = integral_minus_infinity_to(inv, roots.e2);
    return lagrange_reduce(cplx(2.0 * w, 0.0), cplx(w, t));
  }
  const double w1 = integral_root_to_infinity(inv, roots.e1.real());
  const double w3 = integral_minus_infinity_to(inv, roots.e3.real());
  return lagrange_reduce(cplx(2.0 * w1, 0.0), cplx(0.0, 2.0 * w3));
}

/// p(u) and p'(u) for fixed invariants. Construction computes the lattice
/// once; evaluations are then cheap.
class WeierstrassFunction {
 public:
  explicit WeierstrassFunction(const EllipticInvariants& inv)
      : WeierstrassFunction(inv, period_lattice(inv)) {}

  WeierstrassFunction(const EllipticInvariants& inv, const PeriodLattice& lattice)
      : inv_(inv), lattice_(lattice), scale_(lattice.min_length()) {
    // Laurent coefficients of p in the scaled variable v = u/L:
    // p = L^-2 (v^-2 + sum_k d_k v^(2k-2)), d_k = c_k L^(2k).
    const double l2 = scale_ * scale_;
    d_.assign(kTerms + 1, 0.0);
    d_[2] = inv.g2() * l2 * l2 / 20.0;
    d_[3] = inv.g3() * l2 * l2 * l2 / 28.0;
    for (int k = 4; k <= kTerms; ++k) {
      double s = 0.0;
      for (int m = 2; m <= k - 2; ++m) s += d_[m] * d_[k - m];
      d_[k] = 3.0 * s / ((2.0 * k + 1.0) * (k - 3.0));
    }
  }

  const EllipticInvariants& invariants() const { return inv_; }
  const PeriodLattice& lattice() const { return lattice_; }

  /// (p(u), p'(u)).
  std::pair<cplx, cplx> evaluate(cplx u) const {
    u = lattice_.reduce(u);
    if (std::abs(u) < 1e-10 * scale_) {
      std::ostringstream os;
      os << "weierstrass_p: argument " << u << " is within 1e-10 of a lattice point";
      throw PoleError(os.str());
    }
    int halvings = 0;
    const double r0 = 0.4 * scale_;
    while (std::abs(u) > r0) {
      u *= 0.5;
      ++halvings;
    }
    const cplx v = u / scale_;
    const cplx v2 = v * v;
    cplx p = 1.0 / v2;
    cplx dp = -2.0 / (v2 * v);
    cplx power = 1.0;  // v^(2k-2) after the update
    // |v| <= 0.4, so the scaled terms decay at least like 0.16^k; the full
    // sum is cheap and avoids stopping early on runs of zero coefficients.
    for (int k = 2; k <= kTerms; ++k) {
      power *= v2;
      p += d_[k] * power;
      dp += (2.0 * k - 2.0) * d_[k] * power / v;
    }
    p /= scale_ * scale_;
    dp /= scale_ * scale_ * scale_;
    for (int i = 0; i < halvings; ++i) {
      const cplx p2 = 6.0 * p * p - inv_.g2() / 2.0;
      const cplx pn = -2.0 * p + p2 * p2 / (4.0 * dp * dp);
      dp = -dp + 3.0 * p * p2 / dp - p2 * p2 * p2 / (4.0 * dp * dp * dp);
      p = pn;
    }
    return {p, dp};
  }

  cplx operator()(cplx u) const { return evaluate(u).first; }
  cplx derivative(cplx u) const { return evaluate(u).second; }

  /// Taylor coefficients a_0..a_order of p around u, from p'' = 6p^2 - g2/2.
  /// The j-th derivative is j! * a_j.
  std::vector<cplx> taylor(cplx u, int order) const {
    const auto [p, dp] = evaluate(u);
    std::vector<cplx> a(std::max(order, 1) + 1);
    a[0] = p;
    a[1] = dp;
    for (int k = 0; k + 2 <= order; ++k) {
      cplx s = 0.0;
      for (int i = 0; i <= k; ++i) s += a[i] * a[k - i];
      s *= 6.0;
      if (k == 0) s -= inv_.g2() / 2.0;
      a[k + 2] = s / ((k + 2.0) * (k + 1.0));
    }
    a.resize(order + 1);
    return a;
  }

 private:
  static constexpr int kTerms = 60;
  EllipticInvariants inv_;
  PeriodLattice lattice_;
  double scale_;
  std::vector<double> d_;
};

inline cplx weierstrass_p(cplx u, const EllipticInvariants& inv) { return WeierstrassFunction(inv)(u); }
inline cplx weierstrass_p_prime(cplx u, const EllipticInvariants& inv) {
  return WeierstrassFunction(inv).derivative(u);
}

}  // namespace monopole
