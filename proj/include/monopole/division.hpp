#pragma once

// Rational masses: the mass relation says p at a rational multiple of the
// imaginary half-period equals a rational function of alpha, so alpha is a
// root of a special division polynomial with g2, g3 and x replaced by
// their values in alpha.

#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "monopole/division_polynomial.hpp"
#include "monopole/errors.hpp"
#include "monopole/exact.hpp"
#include "monopole/platonic.hpp"
#include "monopole/roots.hpp"

namespace monopole {

/// The mass relation reads p(2 varpi1 k1 / n) = rhs(alpha), gcd(k1, n) = 1.
struct DivisionPoint {
  PlatonicGroup group = PlatonicGroup::Tetrahedral;
  Rational mass;
  long n = 0;
  long k1 = 0;
};

/// Parses "p/q" or "p" into a positive rational in lowest terms.
inline Rational parse_mass(const std::string& text) {
  Rational m;
  if (m.set_str(text, 10) != 0) throw DomainError("mass '" + text + "' is not a rational number p/q");
  if (sgn(m.get_den()) == 0) throw DomainError("mass '" + text + "' has zero denominator");
  m.canonicalize();
  return m;
}

inline DivisionPoint division_point(PlatonicGroup g, const Rational& mass) {
  if (sgn(mass) <= 0) throw DomainError("division_point: mass must be positive");
  const Rational m(mass.get_num(), mass.get_den());  // canonical copy
  if (!m.get_num().fits_slong_p() || !m.get_den().fits_slong_p()) throw ResourceError("division_point: mass too large");
  const long p = m.get_num().get_si(), q = m.get_den().get_si();
  DivisionPoint d;
  d.group = g;
  d.mass = m;
  // tetrahedral: 2 varpi1/(2m+3) = 2 varpi1 q/(2p+3q);
  // octahedral:  3 varpi1/(m+2) = 2 varpi1 3q/(2(p+2q)).
  long num = g == PlatonicGroup::Tetrahedral ? q : 3 * q;
  long den = g == PlatonicGroup::Tetrahedral ? 2 * p + 3 * q : 2 * (p + 2 * q);
  const long c = std::gcd(num, den);
  d.k1 = num / c;
  d.n = den / c;
  return d;
}

/// Integer polynomial in alpha (content 1, positive leading coefficient).
struct AlphaPolynomial {
  PlatonicGroup group = PlatonicGroup::Tetrahedral;
  Rational mass;
  DivisionPoint point;
  IntegerPolynomial poly;
};

inline constexpr long kDefaultDivisionBudget = 15;

namespace detail {

// Substitution polynomials X = L^2 x, G2 = L^4 g2, G3 = L^6 g3 with
// L = alpha (tetrahedral) or alpha (alpha + 1) (octahedral); P_n is
// weighted homogeneous, so P_n(X, G2, G3) = L^(2 deg) P_n(x, g2, g3).
struct HomogenizedData {
  RationalPolynomial X, G2, G3;
};

inline HomogenizedData homogenized_data(PlatonicGroup g) {
  auto q = [](long a, long b) { return make_rational(a, b); };
  auto poly = [](std::vector<Rational> v) { return RationalPolynomial(std::move(v)); };
  const Rational z = 0;
  if (g == PlatonicGroup::Tetrahedral) {
    return {poly({-1, z, q(1, 12)}),                          // (alpha^2 - 12)/12
            poly({z, z, 18, z, q(1, 12)}),                    // alpha^4/12 + 18 alpha^2
            poly({z, z, 27, z, q(5, 2), z, q(-1, 216)})};     // -alpha^6/216 + 5 alpha^4/2 + 27 alpha^2
  }
  const RationalPolynomial ap1 = poly({1, 1});
  return {poly({q(-3, 54), q(60, 54), q(-115, 54), q(10, 54), q(-4, 54)}),
          ap1.pow(4) * poly({z, q(-4, 3), q(5, 3), q(-16, 27), q(16, 243)}),
          ap1.pow(6) * poly({z, z, q(4, 9), q(-41, 81), q(2, 9), q(-32, 729), q(64, 19683)})};
}

using IntegerVector = std::vector<Integer>;

inline IntegerVector multiply(const IntegerVector& a, const IntegerVector& b) {
  if (a.empty() || b.empty()) return {};
  IntegerVector r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

inline void add_scaled(IntegerVector& acc, const IntegerVector& v, const Integer& c) {
  if (acc.size() < v.size()) acc.resize(v.size(), Integer(0));
  for (std::size_t i = 0; i < v.size(); ++i) mpz_addmul(acc[i].get_mpz_t(), v[i].get_mpz_t(), c.get_mpz_t());
}

inline IntegerVector scaled_to_integers(const RationalPolynomial& p, const Integer& s) {
  IntegerVector v;
  for (const auto& c : p.coefficients()) {
    const Rational q = c * s;
    if (q.get_den() != 1) throw IntegrityError("substitution scaling is not integral");
    v.push_back(q.get_num());
  }
  return v;
}

// P(X, G2, G3) up to a positive constant, computed over the integers. P
// must be weighted homogeneous (x, g2, g3 of weights 1, 2, 3); then scaling
// X, G2, G3 by c, c^2, c^3 scales the result by c^deg.
inline IntegerPolynomial substitute_homogeneous(const TrivariatePolynomial& P, const HomogenizedData& h) {
  const int d = P.degree_x();
  Integer c = 1, lcm_coeff = 1;
  for (const auto* q : {&h.X, &h.G2, &h.G3}) {
    for (const auto& r : q->coefficients()) mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), r.get_den().get_mpz_t());
  }
  for (const auto& [e, r] : P.terms()) {
    if (e[0] + 2 * e[1] + 3 * e[2] != d) throw IntegrityError("division polynomial is not weighted homogeneous");
    mpz_lcm(lcm_coeff.get_mpz_t(), lcm_coeff.get_mpz_t(), r.get_den().get_mpz_t());
  }
  const IntegerVector X = scaled_to_integers(h.X, c), G2 = scaled_to_integers(h.G2, c * c),
                      G3 = scaled_to_integers(h.G3, c * c * c);
  // Terms grouped by the power of g2, then of x.
  std::map<int, std::map<int, std::vector<std::pair<int, Integer>>>> grouped;
  int max_c = 0;
  for (const auto& [e, r] : P.terms()) {
    grouped[e[1]][e[0]].emplace_back(e[2], Integer(r * lcm_coeff));
    max_c = std::max(max_c, e[2]);
  }
  std::vector<IntegerVector> by_g3(max_c + 1);
  IntegerVector g2_power{Integer(1)};
  int b_done = 0;
  for (const auto& [b, by_a] : grouped) {
    for (; b_done < b; ++b_done) g2_power = multiply(g2_power, G2);
    IntegerVector term = g2_power;
    int a_done = 0;
    for (const auto& [a, list] : by_a) {
      for (; a_done < a; ++a_done) term = multiply(term, X);
      for (const auto& [cc, coef] : list) add_scaled(by_g3[cc], term, coef);
    }
  }
  IntegerVector acc;
  for (int k = max_c; k >= 0; --k) {
    acc = multiply(acc, G3);
    add_scaled(acc, by_g3[k], Integer(1));
  }
  return IntegerPolynomial(std::move(acc));
}

}  // namespace detail

inline AlphaPolynomial alpha_polynomial(PlatonicGroup g, const Rational& mass, long budget = kDefaultDivisionBudget) {
  AlphaPolynomial a;
  a.group = g;
  a.point = division_point(g, mass);
  a.mass = a.point.mass;
  if (a.point.n > budget) {
    std::ostringstream os;
    os << "alpha_polynomial: division order n = " << a.point.n << " exceeds the budget " << budget;
    throw ResourceError(os.str());
  }
  const auto h = detail::homogenized_data(g);
  const IntegerPolynomial p = detail::substitute_homogeneous(division_poly(static_cast<int>(a.point.n)).poly, h);
  if (p.is_zero()) throw IntegrityError("alpha_polynomial: substitution vanished identically");
  // Remove the factors alpha^j; they only reflect the homogenization.
  std::vector<Integer> c(p.coefficients());
  std::size_t low = 0;
  while (low < c.size() && sgn(c[low]) == 0) ++low;
  c.erase(c.begin(), c.begin() + static_cast<long>(low));
  a.poly = detail::primitive(IntegerPolynomial(std::move(c)));
  if (a.poly.degree() <= 0) throw IntegrityError("alpha_polynomial: constant polynomial");
  if (g == PlatonicGroup::Tetrahedral) {
    for (int k = 1; k <= a.poly.degree(); k += 2) {
      if (sgn(a.poly.coefficients()[k]) != 0) throw IntegrityError("alpha_polynomial: tetrahedral polynomial is not even");
    }
  }
  return a;
}

struct RationalMassAlpha {
  AlphaPolynomial polynomial;
  std::vector<double> candidates;  // real roots in the alpha interval
  double alpha = 0.0;
  double pole_residual = 0.0;      // pole relation residual at alpha (the selection criterion)
  double residual = 0.0;           // mass relation residual at alpha
  double division_residual = 0.0;  // P_n(p(2 varpi1 k1/n)) / max|coefficient|
};

/// Physical alpha for a rational mass: the real root of the alpha
/// polynomial in (0, alpha_max) with the smallest pole relation residual.
/// The mass relation itself can vanish at other roots for the octahedral
/// family, since duplication identifies p(u) with p(2u).
inline RationalMassAlpha alpha_for_rational_mass(PlatonicGroup g, const Rational& mass,
                                                 long budget = kDefaultDivisionBudget) {
  RationalMassAlpha r;
  r.polynomial = alpha_polynomial(g, mass, budget);
  const double m = mass.get_d();
  r.candidates = real_roots_in(r.polynomial.poly, 0.0, alpha_max(g));
  double best = INFINITY;
  for (double c : r.candidates) {
    double res;
    try {
      res = std::abs(pole_relation_residual(g, c, m));
    } catch (const std::runtime_error&) {
      continue;
    }
    if (res < best) {
      best = res;
      r.alpha = c;
    }
  }
  if (!(best < 1e-8)) {
    std::ostringstream os;
    os << "alpha_for_rational_mass: no root of the alpha polynomial satisfies the mass relation (best residual "
       << best << ")";
    throw IntegrityError(os.str());
  }
  r.pole_residual = best;
  r.residual = mass_relation_residual(g, r.alpha, m);
  const EllipticInvariants inv = quotient_invariants(g, r.alpha);
  const WeierstrassFunction wp(inv);
  const cplx x = wp(2.0 * half_periods(inv).varpi1 * double(r.polynomial.point.k1) / double(r.polynomial.point.n));
  const DivisionPolynomial pn = division_poly(static_cast<int>(r.polynomial.point.n));
  double scale = 0.0;
  for (const auto& [e, c] : pn.poly.terms()) {
    scale = std::max(scale, std::abs(c.get_d() * std::pow(std::abs(x), e[0]) * std::pow(std::abs(inv.g2()), e[1]) *
                                     std::pow(std::abs(inv.g3()), e[2])));
  }
  r.division_residual = std::abs(pn.evaluate(x, inv)) / scale;
  return r;
}

}  // namespace monopole
