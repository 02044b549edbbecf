#pragma once

// Minimal polynomials of real algebraic numbers given as a root of an
// integer polynomial: an integer relation among the powers of a
// high-precision value of the root is found by lattice reduction and then
// confirmed by exact division. Also closed forms for roots of degree up to
// two in alpha or alpha^2.

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "monopole/errors.hpp"
#include "monopole/exact.hpp"
#include "monopole/roots.hpp"

namespace monopole {

/// LLL reduction (delta = 3/4) of linearly independent integer row
/// vectors, in exact integer arithmetic.
inline std::vector<std::vector<Integer>> lll_reduce(std::vector<std::vector<Integer>> b) {
  const int n = static_cast<int>(b.size());
  if (n <= 1) return b;
  auto dot = [](const std::vector<Integer>& x, const std::vector<Integer>& y) {
    Integer s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) mpz_addmul(s.get_mpz_t(), x[i].get_mpz_t(), y[i].get_mpz_t());
    return s;
  };
  // d[i + 1] is the Gram determinant of the first i+1 vectors; lam[k][j]
  // the scaled Gram-Schmidt coefficients.
  std::vector<Integer> d(n + 1, Integer(0));
  std::vector<std::vector<Integer>> lam(n, std::vector<Integer>(n, Integer(0)));
  d[0] = 1;
  d[1] = dot(b[0], b[0]);
  if (sgn(d[1]) == 0) throw DomainError("lll_reduce: zero vector");
  auto red = [&](int k, int l) {
    Integer twice = 2 * lam[k][l];
    if (abs(twice) <= d[l + 1]) return;
    // q = round(lam / d)
    Integer q;
    Integer num = 2 * lam[k][l] + d[l + 1];
    Integer den = 2 * d[l + 1];
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    for (std::size_t i = 0; i < b[k].size(); ++i) b[k][i] -= q * b[l][i];
    lam[k][l] -= q * d[l + 1];
    for (int i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };
  int k = 1, kmax = 0;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (int j = 0; j <= k; ++j) {
        Integer u = dot(b[k], b[j]);
        for (int i = 0; i < j; ++i) u = (d[i + 1] * u - lam[k][i] * lam[j][i]) / d[i];
        if (j < k) {
          lam[k][j] = u;
        } else {
          d[k + 1] = u;
          if (sgn(u) == 0) throw DomainError("lll_reduce: vectors are linearly dependent");
        }
      }
    }
    red(k, k - 1);
    if (4 * d[k + 1] * d[k - 1] < 3 * d[k] * d[k] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
      std::swap(b[k], b[k - 1]);
      for (int j = 0; j < k - 1; ++j) std::swap(lam[k][j], lam[k - 1][j]);
      const Integer l = lam[k][k - 1];
      const Integer B = (d[k - 1] * d[k + 1] + l * l) / d[k];
      for (int i = k + 1; i <= kmax; ++i) {
        const Integer t = lam[i][k];
        lam[i][k] = (d[k + 1] * lam[i][k - 1] - l * t) / d[k];
        lam[i][k - 1] = (B * t + l * lam[i][k]) / d[k + 1];
      }
      d[k] = B;
      if (k > 1) --k;
    } else {
      for (int l = k - 2; l >= 0; --l) red(k, l);
      ++k;
    }
  }
  return b;
}

namespace detail {

inline long bit_length(const Integer& x) { return sgn(x) == 0 ? 0 : static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)); }

// Root of p near `root` to `bits` bits, by Newton iteration in binary
// floating point with guard bits for cancellation in p.
inline mpf_class refine_root(const IntegerPolynomial& p, double root, long bits) {
  long coeff_bits = 0;
  for (const auto& c : p.coefficients()) coeff_bits = std::max(coeff_bits, bit_length(c));
  const auto prec = static_cast<mp_bitcnt_t>(bits + coeff_bits + 8 * p.degree() + 128);
  mpf_class x(root, prec);
  const IntegerPolynomial dp = p.derivative();
  auto eval = [&](const IntegerPolynomial& q, const mpf_class& t) {
    mpf_class acc(0, prec);
    for (int k = q.degree(); k >= 0; --k) acc = acc * t + mpf_class(q.coefficients()[k], prec);
    return acc;
  };
  mpf_class tol(1, prec);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), static_cast<mp_bitcnt_t>(bits + 8));
  for (int it = 0; it < 200; ++it) {
    const mpf_class step(eval(p, x) / eval(dp, x), prec);
    x -= step;
    if (abs(step) <= tol * std::max(1.0, std::abs(root))) return x;
  }
  throw NumericError("refine_root: Newton iteration did not converge");
}

// Short integer relation sum c_i x^i = 0, i <= d, from the powers of x
// scaled by 2^bits.
inline IntegerPolynomial lll_relation(const std::vector<mpf_class>& powers, int d, long bits) {
  std::vector<std::vector<Integer>> basis(d + 1, std::vector<Integer>(d + 2, Integer(0)));
  for (int i = 0; i <= d; ++i) {
    basis[i][i] = 1;
    mpf_class scaled(powers[i], powers[i].get_prec());
    mpf_mul_2exp(scaled.get_mpf_t(), scaled.get_mpf_t(), static_cast<mp_bitcnt_t>(bits));
    scaled += scaled >= 0 ? 0.5 : -0.5;
    basis[i][d + 1] = Integer(trunc(scaled));
  }
  const auto reduced = lll_reduce(std::move(basis));
  std::vector<Integer> c(reduced[0].begin(), reduced[0].begin() + d + 1);
  return primitive(IntegerPolynomial(std::move(c)));
}

// True if q changes sign on [root - eps, root + eps] for a small relative eps.
inline bool brackets_root(const IntegerPolynomial& q, double root) {
  constexpr unsigned kShift = 80;
  const double eps = 1e-11 * std::max(1.0, std::abs(root));
  Integer lo, hi;
  mpz_set_d(lo.get_mpz_t(), std::ldexp(root - eps, static_cast<int>(kShift)));
  mpz_set_d(hi.get_mpz_t(), std::ldexp(root + eps, static_cast<int>(kShift)));
  const int a = sign_at_dyadic(q, lo, kShift), b = sign_at_dyadic(q, hi, kShift);
  return a != 0 && b != 0 && a != b;
}

// Bits of precision that let a lattice of dimension d+1 separate a true
// relation with coefficients below 2^h from spurious ones.
inline long relation_bits(int d, long h) { return 64 + d / 2 + (2 * d + 1) * h; }

}  // namespace detail

/// Minimal polynomial over Q (primitive, positive leading coefficient) of
/// the real root of p closest to `root`, searching degrees up to
/// max_degree; nullopt if no divisor of p of that degree is found. Every
/// returned polynomial divides p exactly and changes sign at the root;
/// no proper divisor of it with a root there exists with coefficients
/// inside the Mignotte bound (checked by lattice reduction).
inline std::optional<IntegerPolynomial> minimal_polynomial(const IntegerPolynomial& p, double root,
                                                           int max_degree = 16) {
  const IntegerPolynomial q = squarefree_part(p);
  if (q.degree() < 1) throw DomainError("minimal_polynomial: constant polynomial");
  if (!detail::brackets_root(q, root)) throw DomainError("minimal_polynomial: no root of p near the given value");
  const int top = std::min(max_degree, q.degree());
  auto divides = [](const IntegerPolynomial& d, const IntegerPolynomial& n) {
    return to_rational_polynomial(n.coefficients()).divisible_by(to_rational_polynomial(d.coefficients()));
  };
  // Search with growing coefficient bounds, smallest degree first.
  auto search = [&](const IntegerPolynomial& target, int max_d, long h) -> std::optional<IntegerPolynomial> {
    const long bits = detail::relation_bits(max_d, h);
    const mpf_class x = detail::refine_root(target, root, bits);
    std::vector<mpf_class> powers{mpf_class(1, x.get_prec())};
    for (int i = 1; i <= max_d; ++i) powers.push_back(mpf_class(powers.back() * x, x.get_prec()));
    for (int d = 1; d <= max_d; ++d) {
      const IntegerPolynomial c = detail::lll_relation(powers, d, detail::relation_bits(d, h));
      if (c.degree() >= 1 && divides(c, target) && detail::brackets_root(c, root)) return c;
    }
    return std::nullopt;
  };
  std::optional<IntegerPolynomial> found;
  for (long h : {32L, 128L, 512L}) {
    found = search(q, top, h);
    if (found) break;
  }
  if (!found) return std::nullopt;
  // Minimality: any factor of `found` has coefficients below its Mignotte bound.
  for (;;) {
    if (found->degree() == 1) return found;
    long norm_bits = 0;
    Integer norm2 = 0;
    for (const auto& c : found->coefficients()) norm2 += c * c;
    norm_bits = (detail::bit_length(norm2) + 1) / 2;
    const long h = found->degree() + norm_bits + 1;
    const auto smaller = search(*found, found->degree() - 1, h);
    if (!smaller) return found;
    found = smaller;
  }
}

namespace detail {

// Largest s with s^2 | n by trial division up to a modest bound; the
// remaining cofactor is kept under the root.
inline void split_square(Integer n, Integer& outside, Integer& inside) {
  outside = 1;
  for (long f = 2; f <= 100000; ++f) {
    const Integer f2 = Integer(f) * f;
    if (f2 > n) break;
    while (mpz_divisible_p(n.get_mpz_t(), f2.get_mpz_t())) {
      n /= f2;
      outside *= f;
    }
  }
  inside = n;
}

// Closed form of a root of a x^2 + b x + c (a != 0, real roots) with the
// given sign of the square root, e.g. "2-sqrt(3)" or "(1+sqrt(5))/2".
inline std::string quadratic_root_string(const Integer& a, const Integer& b, const Integer& c, int sign) {
  const Integer disc = b * b - 4 * a * c;
  if (sgn(disc) < 0) throw DomainError("quadratic_root_string: complex roots");
  Integer k, s;
  split_square(disc, k, s);
  // (-b + sign k sqrt(s)) / (2a), reduced by the common factor.
  Integer num = -b, rad = sign * k, den = 2 * a;
  if (s == 1) {
    num += rad;
    rad = 0;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), rad.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
  if (sgn(den) < 0) g = -g;
  num /= g;
  rad /= g;
  den /= g;
  std::ostringstream os;
  if (sgn(rad) == 0) {
    os << num;
  } else {
    const std::string root = "sqrt(" + s.get_str() + ")";
    const Integer mag = abs(rad);
    const std::string term = (mag == 1 ? "" : mag.get_str() + "*") + root;
    if (sgn(num) == 0) {
      os << (sgn(rad) < 0 ? "-" : "") << term;
    } else {
      os << num << (sgn(rad) < 0 ? "-" : "+") << term;
    }
  }
  std::string out = os.str();
  if (den != 1) {
    const bool compound = sgn(num) != 0 && sgn(rad) != 0;
    out = (compound ? "(" + out + ")" : out) + "/" + den.get_str();
  }
  return out;
}

}  // namespace detail

/// Closed form in radicals of the root of the minimal polynomial f near
/// `root`, when f is linear, quadratic, or quadratic in x^2 with a
/// nonnegative root; nullopt otherwise.
inline std::optional<std::string> closed_form(const IntegerPolynomial& f, double root) {
  const auto& c = f.coefficients();
  if (f.degree() == 1) {
    Rational r(-c[0], c[1]);
    r.canonicalize();
    return r.get_str();
  }
  auto pick = [&](const Integer& a, const Integer& b, const Integer& cc, double target) -> std::optional<std::string> {
    const double disc = Integer(b * b - 4 * a * cc).get_d();
    if (disc < 0) return std::nullopt;
    const double plus = (-b.get_d() + std::sqrt(disc)) / (2 * a.get_d());
    const double minus = (-b.get_d() - std::sqrt(disc)) / (2 * a.get_d());
    const int sign = std::abs(plus - target) <= std::abs(minus - target) ? 1 : -1;
    return detail::quadratic_root_string(a, b, cc, sign);
  };
  if (f.degree() == 2) return pick(c[2], c[1], c[0], root);
  if (f.degree() == 4 && sgn(c[1]) == 0 && sgn(c[3]) == 0 && root >= 0) {
    auto inner = pick(c[4], c[2], c[0], root * root);
    if (!inner) return std::nullopt;
    return "sqrt(" + *inner + ")";
  }
  return std::nullopt;
}

}  // namespace monopole
