#pragma once

// Tetrahedrally symmetric 3-monopoles and octahedrally symmetric
// 4-monopoles: the one-parameter curve families, their elliptic quotients,
// the mass relation in both directions and the integrality of the cycle
// that fixes the boundary conditions.

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "monopole/charge2.hpp"
#include "monopole/curve.hpp"
#include "monopole/errors.hpp"
#include "monopole/exact.hpp"
#include "monopole/quadrature.hpp"
#include "monopole/weierstrass.hpp"

namespace monopole {

enum class PlatonicGroup { Tetrahedral, Octahedral };
enum class KleinGroup { A4, S4, A5 };

inline int charge(PlatonicGroup g) { return g == PlatonicGroup::Tetrahedral ? 3 : 4; }
inline std::string group_name(PlatonicGroup g) { return g == PlatonicGroup::Tetrahedral ? "tetra" : "octa"; }

/// The value of alpha at m = 0, which closes the parameter interval (0, alpha_max].
inline double alpha_max(PlatonicGroup g) { return g == PlatonicGroup::Tetrahedral ? std::sqrt(3.0) : 1.0; }

namespace detail {

inline void require_alpha(PlatonicGroup g, double alpha) {
  if (!(alpha > 0.0) || alpha > alpha_max(g) * (1.0 + 1e-15)) {
    std::ostringstream os;
    os << group_name(g) << ": alpha " << alpha << " outside (0, " << alpha_max(g) << "]";
    throw DomainError(os.str());
  }
}

inline void require_positive_mass(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    std::ostringstream os;
    os << "mass " << m << " must be finite and positive";
    throw DomainError(os.str());
  }
}

inline RationalPolynomial rpoly(std::initializer_list<Rational> c) { return RationalPolynomial(std::vector<Rational>(c)); }

}  // namespace detail

/// Klein form of the group as coefficients c[i] of zeta0^i zeta1^(d-i).
inline std::vector<long> klein_form(KleinGroup g) {
  switch (g) {
    case KleinGroup::A4:  // zeta0 zeta1 (zeta1^4 - zeta0^4)
      return {0, 1, 0, 0, 0, -1, 0};
    case KleinGroup::S4:  // zeta1^8 + 14 zeta0^4 zeta1^4 + zeta0^8
      return {1, 0, 0, 0, 14, 0, 0, 0, 1};
    case KleinGroup::A5: {  // zeta0 zeta1 (zeta1^10 + 11 zeta0^5 zeta1^5 - zeta0^10)
      std::vector<long> c(13, 0);
      c[1] = 1;
      c[6] = 11;
      c[11] = -1;
      return c;
    }
  }
  return {};
}

/// The family as an exact form whose coefficients are polynomials in alpha:
/// (w-z)^3 + i alpha (w+z)((wz)^2 - 1), or
/// (w-z)^4 + alpha (w^4 z^4 + 6 w^2 z^2 + 4 wz (w^2+z^2) + 1).
inline BidegreeForm<GaussRationalPoly> ansatz_form(PlatonicGroup g) {
  using P = GaussRationalPoly;
  const P one(GaussRational(1));
  const P a = P::x();
  const P ia = P::monomial(GaussRational::i(), 1);
  const int k = charge(g);
  BidegreeForm<P> f(k);
  // (w - z)^k
  long binom = 1;
  for (int i = 0; i <= k; ++i) {
    f(i, k - i) = one.scaled(GaussRational(((k - i) % 2 ? -binom : binom)));
    binom = binom * (k - i) / (i + 1);
  }
  if (g == PlatonicGroup::Tetrahedral) {
    f(3, 2) = f(3, 2) + ia;
    f(2, 3) = f(2, 3) + ia;
    f(1, 0) = f(1, 0) - ia;
    f(0, 1) = f(0, 1) - ia;
  } else {
    f(4, 4) = f(4, 4) + a;
    f(0, 0) = f(0, 0) + a;
    f(2, 2) = f(2, 2) + a.scaled(GaussRational(6));
    for (auto [i, j] : {std::pair{3, 1}, {1, 3}}) f(i, j) = f(i, j) + a.scaled(GaussRational(4));
  }
  return f;
}

/// The exact form evaluated at a complex alpha (no range check).
inline BidegreeCurve evaluate_form(const BidegreeForm<GaussRationalPoly>& f, std::complex<double> alpha) {
  BidegreeCurve out(f.k);
  for (int i = 0; i <= f.k; ++i) {
    for (int j = 0; j <= f.k; ++j) out(i, j) = f(i, j).evaluate(alpha);
  }
  return out;
}

/// Curve of the family at alpha. For the degree-4 family a nonzero beta adds
/// i beta (w^2 - z^2)((wz)^2 - 1), the tetrahedrally symmetric extension.
inline BidegreeCurve ansatz_curve(PlatonicGroup g, double alpha, double beta = 0.0) {
  detail::require_alpha(g, alpha);
  if (beta != 0.0 && g != PlatonicGroup::Octahedral) throw DomainError("ansatz_curve: beta applies to the degree-4 family only");
  BidegreeCurve s = evaluate_form(ansatz_form(g), alpha);
  if (beta != 0.0) {
    const std::complex<double> ib(0.0, beta);
    s(4, 2) += ib;
    s(0, 2) += ib;
    s(2, 0) -= ib;
    s(2, 4) -= ib;
  }
  return s;
}

/// Curve of the massless monopole the family reaches at m = 0.
inline BidegreeCurve nullaron_curve(PlatonicGroup g) {
  using c = std::complex<double>;
  const double r3 = std::sqrt(3.0);
  if (g == PlatonicGroup::Tetrahedral) {
    return nullaron_from_rational_map({1.0, 0.0, c(0.0, -r3)}, {0.0, c(0.0, r3), 0.0, -1.0});
  }
  return nullaron_from_rational_map({1.0, 0.0, c(0.0, 2.0 * r3), 0.0, 1.0}, {1.0, 0.0, c(0.0, -2.0 * r3), 0.0, 1.0});
}

/// Rational coordinate in which the family's exact data are rational
/// functions: alpha^2 for the tetrahedral family, alpha for the octahedral.
inline double rational_coordinate(PlatonicGroup g, double alpha) {
  return g == PlatonicGroup::Tetrahedral ? alpha * alpha : alpha;
}

/// Quotient invariants (g2, g3) as rational functions of the rational coordinate.
inline std::pair<RationalFunction, RationalFunction> invariant_functions(PlatonicGroup g) {
  using detail::rpoly;
  const Rational q = 0;
  if (g == PlatonicGroup::Tetrahedral) {
    // t = alpha^2: g2 = 1/12 + 18/t, g3 = -1/216 + 5/(2t) + 27/t^2.
    return {{rpoly({216, 1}), rpoly({q, 12})}, {rpoly({5832, 540, -1}), rpoly({q, q, 216})}};
  }
  // g2 = 16/243 - 16/(27a) + 5/(3a^2) - 4/(3a^3),
  // g3 = 64/19683 - 32/(729a) + 2/(9a^2) - 41/(81a^3) + 4/(9a^4).
  return {{rpoly({make_rational(-4, 3), make_rational(5, 3), make_rational(-16, 27), make_rational(16, 243)}),
           rpoly({q, q, q, 1})},
          {rpoly({make_rational(4, 9), make_rational(-41, 81), make_rational(2, 9), make_rational(-32, 729),
                  make_rational(64, 19683)}),
           rpoly({q, q, q, q, 1})}};
}

/// Closed form of the j-invariant (normalized j = g2^3 / (g2^3 - 27 g3^2))
/// in the rational coordinate.
inline RationalFunction j_closed_form(PlatonicGroup g) {
  using detail::rpoly;
  if (g == PlatonicGroup::Tetrahedral) {
    // t (t + 216)^3 / (1728 (t - 27)^3)
    return {rpoly({0, 1}) * rpoly({216, 1}).pow(3), rpoly({-27, 1}).pow(3).scaled(Rational(1728))};
  }
  // (16a^3 - 144a^2 + 405a - 324)^3 / (2^2 3^9 (a - 4)^2 (a - 3)^3)
  return {rpoly({-324, 405, -144, 16}).pow(3), (rpoly({-4, 1}).pow(2) * rpoly({-3, 1}).pow(3)).scaled(Rational(78732))};
}

/// g2^3 / (g2^3 - 27 g3^2) from the invariant functions.
inline RationalFunction j_from_invariants(PlatonicGroup g) {
  const auto [g2, g3] = invariant_functions(g);
  const RationalFunction c3 = g2 * g2 * g2;
  const RationalFunction c27{detail::rpoly({27})};
  return c3 / (c3 - c27 * g3 * g3);
}

/// x-coordinate of the images of the poles of dw/w - dz/z.
inline RationalFunction pole_x_function(PlatonicGroup g) {
  using detail::rpoly;
  if (g == PlatonicGroup::Tetrahedral) return {rpoly({-12, 1}), rpoly({0, 12})};  // 1/12 - 1/t
  return {rpoly({-63, -4}), rpoly({0, 54})};                                       // -2/27 - 7/(6a)
}

/// Right side of the mass relation: the pole x-coordinate for the
/// tetrahedral family, its duplication
/// (-4a^4 + 10a^3 - 115a^2 + 60a - 3) / (54 a^2 (a + 1)^2) for the octahedral.
inline RationalFunction rhs_function(PlatonicGroup g) {
  using detail::rpoly;
  if (g == PlatonicGroup::Tetrahedral) return pole_x_function(g);
  return {rpoly({-3, 60, -115, 10, -4}), rpoly({0, 0, 54}) * rpoly({1, 1}).pow(2)};
}

inline EllipticInvariants quotient_invariants(PlatonicGroup g, double alpha) {
  if (alpha == 0.0) throw PoleError("quotient_invariants: alpha = 0 is a pole");
  detail::require_alpha(g, alpha);
  const double t = rational_coordinate(g, alpha);
  const auto [g2, g3] = invariant_functions(g);
  return {g2.evaluate(t), g3.evaluate(t)};
}

/// Exact (g2, g3) at a rational value t of the rational coordinate.
inline std::pair<Rational, Rational> quotient_invariants_exact(PlatonicGroup g, const Rational& t) {
  if (sgn(t) == 0) throw PoleError("quotient_invariants: alpha = 0 is a pole");
  const auto [g2, g3] = invariant_functions(g);
  return {g2(t), g3(t)};
}

/// Exact j at rational t, by the closed form and by g2^3/(g2^3 - 27 g3^2);
/// throws IntegrityError if the routes differ.
inline Rational j_invariant_exact(PlatonicGroup g, const Rational& t) {
  const auto [g2, g3] = quotient_invariants_exact(g, t);
  const Rational c3 = g2 * g2 * g2, disc = c3 - 27 * g3 * g3;
  if (sgn(disc) == 0) throw PoleError("j_invariant: zero discriminant");
  const Rational via_invariants = c3 / disc;
  const Rational closed = j_closed_form(g)(t);
  if (closed != via_invariants) throw IntegrityError("j_invariant: closed form and invariant route differ");
  return closed;
}

inline double j_invariant(PlatonicGroup g, double alpha) {
  detail::require_alpha(g, alpha);
  return j_closed_form(g).evaluate(rational_coordinate(g, alpha));
}

inline double pole_x(PlatonicGroup g, double alpha) {
  detail::require_alpha(g, alpha);
  return pole_x_function(g).evaluate(rational_coordinate(g, alpha));
}

inline double mass_relation_rhs(PlatonicGroup g, double alpha) {
  detail::require_alpha(g, alpha);
  return rhs_function(g).evaluate(rational_coordinate(g, alpha));
}

namespace detail {

// p(s varpi1), with the imaginary part checked and dropped.
inline double p_on_imaginary_axis(const WeierstrassFunction& wp, const HalfPeriods& hp, double s) {
  const cplx v = wp(s * hp.varpi1);
  if (std::abs(v.imag()) > 1e-9 * std::max(1.0, std::abs(v.real()))) {
    std::ostringstream os;
    os << "weierstrass_p on the imaginary axis has imaginary part " << v.imag();
    throw NumericError(os.str());
  }
  return v.real();
}

// Fraction s of varpi1 with p(s varpi1) equal to the pole x-coordinate:
// tetrahedral 2/(2m+3), octahedral (2m+1)/(2(m+2)).
inline double pole_fraction(PlatonicGroup g, double m) {
  return g == PlatonicGroup::Tetrahedral ? 2.0 / (2.0 * m + 3.0) : (2.0 * m + 1.0) / (2.0 * (m + 2.0));
}

}  // namespace detail

/// Mass relation p(2 varpi1/(2m+3)) - (1/12 - 1/alpha^2) (tetrahedral) or
/// p(3 varpi1/(m+2)) - rhs(alpha) (octahedral).
inline double mass_relation_residual(PlatonicGroup g, double alpha, double m) {
  detail::require_positive_mass(m);
  const EllipticInvariants inv = quotient_invariants(g, alpha);
  const HalfPeriods hp = half_periods(inv);
  const WeierstrassFunction wp(inv);
  const double s = g == PlatonicGroup::Tetrahedral ? 2.0 / (2.0 * m + 3.0) : 3.0 / (m + 2.0);
  return detail::p_on_imaginary_axis(wp, hp, s) - mass_relation_rhs(g, alpha);
}

/// p(s varpi1) - pole_x(alpha) at the pole fraction s; for the tetrahedral
/// family this is the mass relation itself, for the octahedral family the
/// relation before the duplication formula.
inline double pole_relation_residual(PlatonicGroup g, double alpha, double m) {
  detail::require_positive_mass(m);
  const EllipticInvariants inv = quotient_invariants(g, alpha);
  const HalfPeriods hp = half_periods(inv);
  const WeierstrassFunction wp(inv);
  return detail::p_on_imaginary_axis(wp, hp, detail::pole_fraction(g, m)) - pole_x(g, alpha);
}

/// Mass from alpha by quadrature: s = int_{-inf}^{x_pole} dx/sqrt(-F) / |varpi1|
/// is the pole fraction, which is then inverted for m.
inline double mass_from_alpha(PlatonicGroup g, double alpha) {
  detail::require_alpha(g, alpha);
  if (alpha >= alpha_max(g)) return 0.0;
  const EllipticInvariants inv = quotient_invariants(g, alpha);
  const double s = integral_minus_infinity_to(inv, pole_x(g, alpha)) / half_periods(inv).varpi1.imag();
  return g == PlatonicGroup::Tetrahedral ? (2.0 / s - 3.0) / 2.0 : (4.0 * s - 1.0) / (2.0 * (1.0 - s));
}

struct AlphaSolution {
  double alpha = 0.0;
  double residual = 0.0;  // mass_relation_residual at the solution (0 at m = 0)
  int iterations = 0;
};

/// Alpha for mass m: the zero of pole_relation_residual, bracketed by
/// halving down from alpha_max and bisected in log(alpha).
inline AlphaSolution alpha_from_mass(PlatonicGroup g, double m) {
  detail::require_mass(m);
  AlphaSolution out;
  if (m == 0.0) {
    out.alpha = alpha_max(g);
    return out;
  }
  auto sign = [&](double a) { return pole_relation_residual(g, a, m) > 0.0 ? 1 : -1; };
  double hi = alpha_max(g);
  const int s_hi = sign(hi);
  double lo = hi;
  int s_lo = s_hi;
  for (int i = 0; i < 200 && s_lo == s_hi; ++i) {
    hi = lo;
    lo *= 0.5;
    s_lo = sign(lo);
    ++out.iterations;
  }
  if (s_lo == s_hi) {
    std::ostringstream os;
    os << "alpha_from_mass: no sign change for m = " << m;
    throw NumericError(os.str());
  }
  while (hi - lo > 1e-14 * hi) {
    const double mid = std::sqrt(lo * hi);
    if (mid <= lo || mid >= hi) break;
    if (sign(mid) == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++out.iterations;
  }
  out.alpha = 0.5 * (lo + hi);
  out.residual = mass_relation_residual(g, out.alpha, m);
  return out;
}

/// Integers (l1, l2) with l1 varpi + l2 varpi' equal to the integral of the
/// holomorphic form along the image of the pole-to-pole path.
struct CycleIntegers {
  int ell1 = 0;
  int ell2 = 0;
  double raw_ell1 = 0.0;      // from both real equations, without assuming l2 = -2 l1
  double raw_ell2 = 0.0;
  cplx constrained_ell1;      // -R / varpi1, assuming l2 = -2 l1
  double residual = 0.0;
};

/// tetrahedral: R = 2i(2m+3) int_{x_pole}^{-inf} dx/sqrt(-F);
/// octahedral:  R = 4i(m+2) int_{e2}^{x_pole} dx/sqrt(-F).
inline CycleIntegers verify_cycle_integers(PlatonicGroup g, double alpha, double m) {
  if (!(m >= 0.0) || !std::isfinite(m)) throw DomainError("verify_cycle_integers: mass must be finite and nonnegative");
  const EllipticInvariants inv = quotient_invariants(g, alpha);
  const HalfPeriods hp = half_periods(inv);
  const double xp = pole_x(g, alpha);
  cplx R;
  if (g == PlatonicGroup::Tetrahedral) {
    R = cplx(0.0, -2.0 * (2.0 * m + 3.0) * integral_minus_infinity_to(inv, xp));
  } else {
    R = cplx(0.0, -4.0 * (m + 2.0) * integral_to_root(inv, xp));
  }
  CycleIntegers c;
  c.raw_ell2 = R.imag() / hp.varpi_prime.imag();
  c.raw_ell1 = (R.real() - c.raw_ell2 * hp.varpi_prime.real()) / hp.varpi;
  c.constrained_ell1 = -R / hp.varpi1;
  c.ell1 = static_cast<int>(std::lround(c.raw_ell1));
  c.ell2 = static_cast<int>(std::lround(c.raw_ell2));
  c.residual = std::max({std::abs(c.raw_ell1 - c.ell1), std::abs(c.raw_ell2 - c.ell2),
                         std::abs(c.constrained_ell1 - double(c.ell1))});
  if (c.residual >= 1e-6 || c.ell2 != -2 * c.ell1) {
    std::ostringstream os;
    os << "verify_cycle_integers: (" << c.raw_ell1 << ", " << c.raw_ell2 << ") is not an integer pair with l2 = -2 l1";
    throw IntegrityError(os.str());
  }
  return c;
}

/// Invariant functions v = P3/P1^3, x = P4/P1^4, y = P6/P1^6 of the
/// tetrahedral group on P1 x P1, P1 = w - z.
struct TetraInvariants {
  cplx v, x, y;
};

inline TetraInvariants tetra_invariants(cplx w, cplx z) {
  const cplx p1 = w - z;
  if (std::abs(p1) <= 1e-12 * std::max({1.0, std::abs(w), std::abs(z)})) {
    throw PoleError("invariants_at_point: w = z is a pole of the invariants");
  }
  const cplx s = w + z, q = w * z, q2 = q * q;
  const cplx p3 = s * (q2 - 1.0);
  const cplx p4 = q2 * q2 + std::pow(w, 4) + std::pow(z, 4) + 12.0 * q2 + 1.0;
  const cplx s2 = s * s;
  const cplx p6 = q2 * q2 * q2 - (q2 + 1.0) * (s2 * s2 + 4.0 * q * s2 + q2) + 1.0;
  const cplx p1_2 = p1 * p1;
  return {p3 / (p1_2 * p1), p4 / (p1_2 * p1_2), p6 / (p1_2 * p1_2 * p1_2)};
}

/// Image (x, y) of a curve point on the Weierstrass model of the quotient.
inline std::pair<cplx, cplx> invariants_at_point(PlatonicGroup g, double alpha, cplx w, cplx z) {
  const TetraInvariants t = tetra_invariants(w, z);
  if (g == PlatonicGroup::Tetrahedral) return {t.x - 11.0 / 12.0, 2.0 * t.y};
  const cplx x = 1.5 * t.v * t.v + 1.0 / (3.0 * alpha) - 2.0 / 27.0;
  const cplx y = cplx(0.0, std::numbers::sqrt2) * t.v * t.y;
  return {x, y};
}

/// Everything known about the quotient at (alpha, m).
struct QuotientCurve {
  PlatonicGroup group = PlatonicGroup::Tetrahedral;
  double alpha = 0.0;
  double m = 0.0;
  EllipticInvariants inv{1.0, 0.0};
  double j = 0.0;
  double x_pole = 0.0;
  double rhs = 0.0;
  HalfPeriods periods;
  int ell1 = 0;
  int ell2 = 0;
  double residual = 0.0;  // mass relation residual
};

/// Alpha from the mass relation, then the quotient data at that alpha.
inline QuotientCurve quotient_curve_for_mass(PlatonicGroup g, double m) {
  const AlphaSolution sol = alpha_from_mass(g, m);
  QuotientCurve q;
  q.group = g;
  q.alpha = sol.alpha;
  q.m = m;
  q.inv = quotient_invariants(g, sol.alpha);
  q.j = j_invariant(g, sol.alpha);
  q.x_pole = pole_x(g, sol.alpha);
  q.rhs = mass_relation_rhs(g, sol.alpha);
  q.periods = half_periods(q.inv);
  if (m > 0.0) {
    const CycleIntegers c = verify_cycle_integers(g, sol.alpha, m);
    q.ell1 = c.ell1;
    q.ell2 = c.ell2;
    q.residual = sol.residual;
  }
  return q;
}

/// Euclidean limit of the tetrahedral family: alpha ~ abar / m^3 with
/// abar = Gamma(1/3)^9 / (2^6 pi^3); the limit curve is
/// eta^3 + 2i abar zeta (zeta^4 - 1) = 0.
struct EuclidTetra {
  double alpha_bar = 0.0;
  double gamma_third = 0.0;             // std::tgamma(1/3)
  double gamma_third_quadrature = 0.0;  // 3 int_0^inf exp(-s^3) ds
  std::vector<cplx> curve;              // coefficients of zeta^0..zeta^5 beside eta^3
  cplx varpi1;                          // imaginary half-period for invariants (0, 27/abar^4)
  cplx gamma_expression;                // closed Gamma-function form of the half-period
  double richardson = 0.0;              // extrapolated m^3 alpha(m) over m = 10, 20, 40
  double richardson_rel_error = 0.0;
};

inline double euclid_alpha_bar() {
  const double g = std::tgamma(1.0 / 3.0);
  return std::pow(g, 9) / (64.0 * std::pow(std::numbers::pi, 3));
}

/// Gamma-function form of the half-period of the limit curve with
/// parameter a (real part from the e2-to-e1 segment, plus the e2-to-infinity part).
inline cplx euclid_period_expression(double a) {
  const double pi = std::numbers::pi;
  const double c = std::cbrt(2.0) * std::sqrt(pi) * std::pow(a, 2.0 / 3.0);
  const cplx rot = std::polar(1.0, 2.0 * pi / 3.0);
  return -c * rot * std::tgamma(1.0 / 3.0) / (3.0 * std::tgamma(5.0 / 6.0)) -
         c * std::tgamma(1.0 / 6.0) / (9.0 * std::sqrt(3.0) * std::tgamma(5.0 / 3.0));
}

inline EuclidTetra euclid_limit_tetra(bool with_extrapolation = true) {
  EuclidTetra e;
  e.gamma_third = std::tgamma(1.0 / 3.0);
  e.gamma_third_quadrature = 3.0 * tanh_sinh([](double s) { return std::exp(-s * s * s); }, 0.0, 8.0).value;
  if (std::abs(e.gamma_third - e.gamma_third_quadrature) > 1e-12 * e.gamma_third) {
    throw IntegrityError("euclid_limit_tetra: Gamma(1/3) routes disagree");
  }
  e.alpha_bar = euclid_alpha_bar();
  e.curve.assign(6, 0.0);
  e.curve[5] = cplx(0.0, 2.0 * e.alpha_bar);
  e.curve[1] = cplx(0.0, -2.0 * e.alpha_bar);
  const double ab2 = e.alpha_bar * e.alpha_bar;
  e.varpi1 = half_periods(EllipticInvariants(0.0, 27.0 / (ab2 * ab2))).varpi1;
  e.gamma_expression = euclid_period_expression(e.alpha_bar);
  if (with_extrapolation) {
    auto f = [](double m) { return m * m * m * alpha_from_mass(PlatonicGroup::Tetrahedral, m).alpha; };
    const double f10 = f(10.0), f20 = f(20.0), f40 = f(40.0);
    const double r1 = 2.0 * f20 - f10, r2 = 2.0 * f40 - f20;
    e.richardson = (4.0 * r2 - r1) / 3.0;
    e.richardson_rel_error = std::abs(e.richardson - e.alpha_bar) / e.alpha_bar;
  }
  return e;
}

}  // namespace monopole
