#pragma once

// Division polynomials of the curve y^2 = 4x^3 - g2 x - g3, exact in
// (x, g2, g3), and the Hankel-determinant form of psi_n evaluated from
// derivatives of p(u).

#include <array>
#include <complex>
#include <map>
#include <sstream>
#include <vector>

#include "monopole/errors.hpp"
#include "monopole/exact.hpp"
#include "monopole/weierstrass.hpp"

namespace monopole {

/// Polynomial in (x, g2, g3) with rational coefficients, sparse.
class TrivariatePolynomial {
 public:
  using Exponents = std::array<int, 3>;

  TrivariatePolynomial() = default;
  static TrivariatePolynomial term(Rational c, int ex, int e2, int e3) {
    TrivariatePolynomial p;
    if (sgn(c) != 0) p.terms_[{ex, e2, e3}] = std::move(c);
    return p;
  }
  static TrivariatePolynomial constant(long c) { return term(Rational(c), 0, 0, 0); }

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree_x() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0]);
    return d;
  }

  friend TrivariatePolynomial operator+(TrivariatePolynomial a, const TrivariatePolynomial& b) {
    for (const auto& [e, c] : b.terms_) a.add(e, c);
    return a;
  }
  friend TrivariatePolynomial operator-(TrivariatePolynomial a, const TrivariatePolynomial& b) {
    for (const auto& [e, c] : b.terms_) a.add(e, -c);
    return a;
  }
  friend TrivariatePolynomial operator*(const TrivariatePolynomial& a, const TrivariatePolynomial& b) {
    TrivariatePolynomial r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        r.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
      }
    }
    return r;
  }
  TrivariatePolynomial scaled(const Rational& s) const {
    TrivariatePolynomial r;
    for (const auto& [e, c] : terms_) r.add(e, c * s);
    return r;
  }
  friend bool operator==(const TrivariatePolynomial& a, const TrivariatePolynomial& b) {
    return a.terms_ == b.terms_;
  }

  /// Coefficient of x^k as a polynomial in (g2, g3).
  TrivariatePolynomial coefficient_of_x(int k) const {
    TrivariatePolynomial r;
    for (const auto& [e, c] : terms_) {
      if (e[0] == k) r.add({0, e[1], e[2]}, c);
    }
    return r;
  }

  std::complex<double> evaluate(std::complex<double> x, double g2, double g3) const {
    std::complex<double> s = 0.0;
    for (const auto& [e, c] : terms_) {
      s += c.get_d() * std::pow(x, e[0]) * std::pow(g2, e[1]) * std::pow(g3, e[2]);
    }
    return s;
  }

  /// Exact substitution x = X, g2 = G2, g3 = G3 for univariate polynomials.
  template <class C>
  Polynomial<C> substitute(const Polynomial<C>& X, const Polynomial<C>& G2, const Polynomial<C>& G3) const {
    std::vector<Polynomial<C>> pow2{Polynomial<C>(C(1))}, pow3{Polynomial<C>(C(1))};
    auto power = [](std::vector<Polynomial<C>>& cache, const Polynomial<C>& base, int e) -> const Polynomial<C>& {
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
      return cache[e];
    };
    const int dx = degree_x();
    std::vector<Polynomial<C>> by_x(dx + 1);
    for (const auto& [e, c] : terms_) {
      by_x[e[0]] += (power(pow2, G2, e[1]) * power(pow3, G3, e[2])).scaled(C(c));
    }
    Polynomial<C> acc;
    for (int k = dx; k >= 0; --k) acc = acc * X + by_x[k];
    return acc;
  }

 private:
  void add(const Exponents& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  std::map<Exponents, Rational> terms_;
};

namespace detail {

// f_n with psi_n = f_n for odd n and psi_n = psi_2 f_n for even n, where
// psi_2 = -p'(u) and psi_2^2 = F(x) = 4x^3 - g2 x - g3.
inline std::vector<TrivariatePolynomial> reduced_division_sequence(int n) {
  using T = TrivariatePolynomial;
  auto q = [](long a, long b) { return make_rational(a, b); };
  const T F = T::term(q(4, 1), 3, 0, 0) - T::term(q(1, 1), 1, 1, 0) - T::term(q(1, 1), 0, 0, 1);
  const T F2 = F * F;
  std::vector<T> f(std::max(n, 4) + 1);
  f[0] = T();
  f[1] = T::constant(1);
  f[2] = T::constant(1);
  f[3] = T::term(q(3, 1), 4, 0, 0) - T::term(q(3, 2), 2, 1, 0) - T::term(q(3, 1), 1, 0, 1) -
         T::term(q(1, 16), 0, 2, 0);
  f[4] = T::term(q(2, 1), 6, 0, 0) - T::term(q(5, 2), 4, 1, 0) - T::term(q(10, 1), 3, 0, 1) -
         T::term(q(5, 8), 2, 2, 0) - T::term(q(1, 2), 1, 1, 1) - T::term(q(1, 1), 0, 0, 2) +
         T::term(q(1, 32), 0, 3, 0);
  for (int k = 5; k <= n; ++k) {
    const int m = k / 2;
    if (k % 2 == 1) {
      const T a = f[m + 2] * f[m] * f[m] * f[m];
      const T b = f[m - 1] * f[m + 1] * f[m + 1] * f[m + 1];
      f[k] = (m % 2 == 0) ? F2 * a - b : a - F2 * b;
    } else {
      f[k] = f[m] * (f[m + 2] * f[m - 1] * f[m - 1] - f[m - 2] * f[m + 1] * f[m + 1]);
    }
  }
  f.resize(n + 1);
  return f;
}

}  // namespace detail

/// Monic special division polynomial P_n in x with coefficients in
/// Q[g2, g3]: P_n = psi_n / n for odd n and psi_n / ((n/2) psi_2) for
/// even n > 2. P_2 is taken as F(x)/4, whose roots are e1, e2, e3.
struct DivisionPolynomial {
  int n = 0;
  TrivariatePolynomial poly;

  int degree() const { return poly.degree_x(); }
  std::complex<double> evaluate(std::complex<double> x, const EllipticInvariants& inv) const {
    return poly.evaluate(x, inv.g2(), inv.g3());
  }
};

inline DivisionPolynomial division_poly(int n) {
  if (n < 2) {
    std::ostringstream os;
    os << "division_poly: order " << n << " < 2";
    throw DomainError(os.str());
  }
  DivisionPolynomial d;
  d.n = n;
  if (n == 2) {
    d.poly = TrivariatePolynomial::term(Rational(1), 3, 0, 0) -
             TrivariatePolynomial::term(make_rational(1, 4), 1, 1, 0) -
             TrivariatePolynomial::term(make_rational(1, 4), 0, 0, 1);
    return d;
  }
  const auto f = detail::reduced_division_sequence(n);
  d.poly = f[n].scaled(n % 2 == 1 ? make_rational(1, n) : make_rational(2, n));
  return d;
}

/// psi_n(u) = (-1)^(n-1) / (prod_{j<n} j!)^2 * det[p^(i+j-1)(u)]_{i,j=1}^{n-1}.
inline std::complex<double> division_psi_numeric(int n, std::complex<double> u, const WeierstrassFunction& wp) {
  if (n < 2) throw DomainError("division_psi_numeric: order < 2");
  const int size = n - 1;
  const auto a = wp.taylor(u, 2 * n - 3);
  // Derivatives p^(k) = k! a_k, with the 1/(prod j!)^2 prefactor folded
  // into row and column scalings to keep magnitudes moderate.
  std::vector<double> fact(2 * n, 1.0);
  for (int k = 1; k < 2 * n; ++k) fact[k] = fact[k - 1] * k;
  std::vector<std::vector<std::complex<double>>> m(size, std::vector<std::complex<double>>(size));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const int k = i + j + 1;
      m[i][j] = fact[k] * a[k] / (fact[i + 1] * fact[j + 1]);
    }
  }
  std::complex<double> det = 1.0;
  for (int c = 0; c < size; ++c) {
    int piv = c;
    for (int r = c + 1; r < size; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    }
    if (m[piv][c] == 0.0) return 0.0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < size; ++r) {
      const std::complex<double> f = m[r][c] / m[c][c];
      for (int j = c; j < size; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return (n % 2 == 0 ? -1.0 : 1.0) * det;
}

inline std::complex<double> division_psi_numeric(int n, std::complex<double> u, const EllipticInvariants& inv) {
  return division_psi_numeric(n, u, WeierstrassFunction(inv));
}

}  // namespace monopole
