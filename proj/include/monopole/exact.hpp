#pragma once

// Exact arithmetic: GMP rationals, Gaussian rationals and Gaussian
// integers, and dense univariate polynomials over any of them.

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "monopole/errors.hpp"

namespace monopole {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussRational(long r) : re(r) {}                 // NOLINT(google-explicit-constructor)
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    const Rational n = b.norm();
    if (sgn(n) == 0) throw DomainError("division by zero Gaussian rational");
    const GaussRational t = a * b.conj();
    return {t.re / n, t.im / n};
  }
  GaussRational& operator+=(const GaussRational& b) { return *this = *this + b; }
  GaussRational& operator-=(const GaussRational& b) { return *this = *this - b; }
  GaussRational& operator*=(const GaussRational& b) { return *this = *this * b; }
};

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& r) { return r.get_str(); }

inline std::string to_string(const GaussRational& g) {
  if (sgn(g.im) == 0) return g.re.get_str();
  if (sgn(g.re) == 0) return g.im.get_str() + "*I";
  std::ostringstream os;
  os << "(" << g.re.get_str() << (sgn(g.im) > 0 ? "+" : "") << g.im.get_str() << "*I)";
  return os.str();
}

/// Gaussian integer; division is exact division and throws if inexact.
struct GaussInteger {
  Integer re;
  Integer im;

  GaussInteger() = default;
  GaussInteger(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussInteger(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  friend bool operator==(const GaussInteger& a, const GaussInteger& b) { return a.re == b.re && a.im == b.im; }
  friend GaussInteger operator+(const GaussInteger& a, const GaussInteger& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussInteger operator-(const GaussInteger& a, const GaussInteger& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussInteger operator-(const GaussInteger& a) { return {-a.re, -a.im}; }
  friend GaussInteger operator*(const GaussInteger& a, const GaussInteger& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussInteger operator/(const GaussInteger& a, const GaussInteger& b) {
    const Integer n = b.re * b.re + b.im * b.im;
    if (sgn(n) == 0) throw DomainError("division by zero Gaussian integer");
    Integer r = a.re * b.re + a.im * b.im;
    Integer i = a.im * b.re - a.re * b.im;
    if (!mpz_divisible_p(r.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(i.get_mpz_t(), n.get_mpz_t())) {
      throw IntegrityError("inexact Gaussian integer division");
    }
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(i.get_mpz_t(), i.get_mpz_t(), n.get_mpz_t());
    return {r, i};
  }
  GaussInteger& operator+=(const GaussInteger& b) { return *this = *this + b; }
  GaussInteger& operator-=(const GaussInteger& b) { return *this = *this - b; }
};

namespace detail {
inline bool coeff_is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool coeff_is_zero(const Integer& r) { return sgn(r) == 0; }
inline bool coeff_is_zero(const GaussRational& r) { return r.is_zero(); }
inline bool coeff_is_zero(const GaussInteger& r) { return r.is_zero(); }
inline bool coeff_is_zero(double r) { return r == 0.0; }
inline bool coeff_is_zero(const std::complex<double>& r) { return r == 0.0; }

inline Integer exact_quotient(const Integer& a, const Integer& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw IntegrityError("inexact integer division");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
template <class C>
C exact_quotient(const C& a, const C& b) {
  return a / b;
}

inline std::complex<double> to_complex(const Rational& r) { return r.get_d(); }
inline std::complex<double> to_complex(const Integer& r) { return r.get_d(); }
inline std::complex<double> to_complex(const GaussRational& r) { return r.to_complex(); }
inline std::complex<double> to_complex(const GaussInteger& r) { return {r.re.get_d(), r.im.get_d()}; }
}  // namespace detail

/// Dense univariate polynomial, coefficients indexed by degree and kept
/// trimmed so the leading coefficient is nonzero (the zero polynomial has
/// no coefficients).
template <class C>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(C constant) {  // NOLINT(google-explicit-constructor)
    c_.push_back(std::move(constant));
    trim();
  }

  static Polynomial monomial(C coeff, std::size_t degree) {
    std::vector<C> v(degree + 1, C(0));
    v[degree] = std::move(coeff);
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(C(1), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<C>& coefficients() const { return c_; }
  C coeff(std::size_t k) const { return k < c_.size() ? c_[k] : C(0); }
  const C& leading() const { return c_.back(); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<C> v(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<C> v(a.c_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -a.c_[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> v(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (detail::coeff_is_zero(b.c_[j])) continue;
        v[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Polynomial(std::move(v));
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scaled(const C& s) const {
    std::vector<C> v(c_);
    for (auto& x : v) x = x * s;
    return Polynomial(std::move(v));
  }

  Polynomial pow(unsigned e) const {
    Polynomial result(C(1)), base(*this);
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<C> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * C(static_cast<long>(k));
    return Polynomial(std::move(v));
  }

  /// Quotient and remainder. Requires exact division by the leading
  /// coefficient at every step (always true over a field).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<C> r(c_);
    if (degree() < d.degree()) return {Polynomial(), *this};
    std::vector<C> q(c_.size() - d.c_.size() + 1, C(0));
    const std::size_t dd = d.c_.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
      const C& top = r[k + dd];
      if (detail::coeff_is_zero(top)) continue;
      const C f = detail::exact_quotient(top, d.c_.back());
      q[k] = f;
      for (std::size_t j = 0; j <= dd; ++j) r[k + j] -= f * d.c_[j];
    }
    r.resize(dd);
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  /// Quotient of an exact division; throws IntegrityError if the remainder is nonzero.
  Polynomial divide_exact(const Polynomial& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw IntegrityError("polynomial division is not exact");
    return q;
  }

  bool divisible_by(const Polynomial& d) const { return divmod(d).second.is_zero(); }

  C operator()(const C& x) const {
    C acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  std::complex<double> evaluate(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + detail::to_complex(c_[k]);
    return acc;
  }

  /// p(q(x)).
  Polynomial compose(const Polynomial& q) const {
    Polynomial acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * q + Polynomial(c_[k]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<C> c_;
};

namespace detail {
template <class C>
bool coeff_is_zero(const Polynomial<C>& p) {
  return p.is_zero();
}
}  // namespace detail

using RationalPolynomial = Polynomial<Rational>;
using GaussRationalPoly = Polynomial<GaussRational>;

/// Monic greatest common divisor over the rationals.
inline RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    if (!r.is_zero()) r = r.scaled(Rational(1) / r.leading());
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.leading());
}

/// Product of the distinct irreducible factors (up to a constant).
inline RationalPolynomial squarefree_part(const RationalPolynomial& p) {
  if (p.degree() <= 0) return p;
  return p.divide_exact(gcd(p, p.derivative()));
}

/// Scales a rational polynomial to integer coefficients with content 1 and
/// positive leading coefficient.
inline std::vector<Integer> primitive_integer_coefficients(const RationalPolynomial& p) {
  Integer den = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  std::vector<Integer> v;
  Integer content = 0;
  for (const auto& c : p.coefficients()) {
    Integer n = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    v.push_back(std::move(n));
  }
  if (v.empty()) return v;
  if (sgn(v.back()) < 0) content = -content;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  return v;
}

inline RationalPolynomial to_rational_polynomial(const std::vector<Integer>& v) {
  std::vector<Rational> c;
  c.reserve(v.size());
  for (const auto& x : v) c.emplace_back(x);
  return RationalPolynomial(std::move(c));
}

inline RationalPolynomial primitive_part(const RationalPolynomial& p) {
  return to_rational_polynomial(primitive_integer_coefficients(p));
}

/// Human-readable form in the variable `var`, highest degree first,
/// e.g. "a^2-4*a+1".
template <class C>
std::string to_string(const Polynomial<C>& p, const std::string& var = "a") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const C& c = p.coefficients()[k];
    if (detail::coeff_is_zero(c)) continue;
    std::string s = to_string(c);
    bool negative = !s.empty() && s[0] == '-';
    if (negative) s = s.substr(1);
    if (!first || negative) os << (negative ? "-" : "+");
    const bool unit = s == "1";
    if (k == 0) {
      os << s;
    } else {
      if (!unit) os << s << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

/// Quotient of rational polynomials num/den, unreduced.
struct RationalFunction {
  RationalPolynomial num;
  RationalPolynomial den{Rational(1)};

  Rational operator()(const Rational& t) const {
    const Rational d = den(t);
    if (sgn(d) == 0) throw PoleError("rational function evaluated at a pole");
    return num(t) / d;
  }
  double evaluate(double t) const {
    const double d = den.evaluate(t).real();
    if (d == 0.0) throw PoleError("rational function evaluated at a pole");
    return num.evaluate(t).real() / d;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num.is_zero()) throw DomainError("rational function division by zero");
    return {a.num * b.den, a.den * b.num};
  }
  /// Equality as functions (cross-multiplication).
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num * b.den == b.num * a.den;
  }
};

}  // namespace monopole
