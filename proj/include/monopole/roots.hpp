#pragma once

// Polynomial root finding: all complex roots of a numeric polynomial
// (companion matrix eigenvalues, Newton-polished) and isolation of the
// real roots of an exact integer polynomial by exact sign evaluation.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <complex>
#include <cstdint>
#include <vector>

#include "monopole/errors.hpp"
#include "monopole/exact.hpp"

namespace monopole {

using IntegerPolynomial = Polynomial<Integer>;

/// All roots of sum_k c[k] x^k (leading coefficient nonzero).
inline std::vector<std::complex<double>> polynomial_roots(std::vector<std::complex<double>> c) {
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.size() < 2) throw DomainError("polynomial_roots: constant polynomial");
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NumericError("polynomial_roots: eigenvalue iteration failed");
  std::vector<std::complex<double>> roots(n);
  for (int i = 0; i < n; ++i) {
    std::complex<double> x = solver.eigenvalues()[i];
    for (int it = 0; it < 3; ++it) {
      std::complex<double> p = 0.0, dp = 0.0;
      for (int k = n; k >= 0; --k) {
        dp = dp * x + p;
        p = p * x + c[k];
      }
      if (dp == 0.0) break;
      const std::complex<double> step = p / dp;
      if (!std::isfinite(std::abs(step)) || std::abs(step) > 1e-6 * std::max(1.0, std::abs(x))) break;
      x -= step;
    }
    roots[i] = x;
  }
  return roots;
}

namespace detail {

inline IntegerPolynomial primitive(const IntegerPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = 0;
  for (const auto& c : p.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(p.leading()) < 0) g = -g;
  std::vector<Integer> v(p.coefficients());
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntegerPolynomial(std::move(v));
}

// lc(b)^(deg a - deg b + 1) * a mod b, over the integers.
inline IntegerPolynomial pseudo_remainder(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  std::vector<Integer> r(a.coefficients());
  const int db = b.degree();
  const Integer& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Integer top = r[k];
    for (int j = 0; j <= k; ++j) r[j] *= lb;
    if (sgn(top) == 0) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= top * b.coefficients()[j];
  }
  r.resize(std::max(db, 0));
  return IntegerPolynomial(std::move(r));
}

inline IntegerPolynomial integer_gcd(IntegerPolynomial a, IntegerPolynomial b) {
  a = primitive(a);
  b = primitive(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntegerPolynomial r = primitive(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

inline IntegerPolynomial to_integer_polynomial(const std::vector<Integer>& v) { return IntegerPolynomial(v); }

namespace detail {

// True if gcd(p, p') is constant modulo a prime not dividing the leading
// coefficient, which implies p is squarefree over Q. False means unknown.
inline bool squarefree_mod_prime(const IntegerPolynomial& p) {
  constexpr std::uint64_t P = 2147483647;  // 2^31 - 1
  if (mpz_fdiv_ui(p.leading().get_mpz_t(), P) == 0 || p.degree() >= static_cast<int>(P)) return false;
  auto mulmod = [](std::uint64_t a, std::uint64_t b) { return a * b % P; };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a)) {
      if (e & 1) r = mulmod(r, a);
    }
    return r;
  };
  std::vector<std::uint64_t> a, b;
  for (const auto& c : p.coefficients()) a.push_back(mpz_fdiv_ui(c.get_mpz_t(), P));
  for (std::size_t k = 1; k < a.size(); ++k) b.push_back(mulmod(a[k], k % P));
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    const std::uint64_t inv = powmod(b.back(), P - 2);
    while (a.size() >= b.size()) {
      const std::uint64_t f = mulmod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + P - mulmod(f, b[j])) % P;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.size() == 1;
}

}  // namespace detail

/// Squarefree part of an integer polynomial (primitive, positive leading coefficient).
inline IntegerPolynomial squarefree_part(const IntegerPolynomial& p) {
  if (p.degree() <= 0) return p;
  if (detail::squarefree_mod_prime(p)) return detail::primitive(p);
  const IntegerPolynomial g = detail::integer_gcd(p, p.derivative());
  if (g.degree() == 0) return detail::primitive(p);
  const RationalPolynomial q = to_rational_polynomial(p.coefficients()).divide_exact(to_rational_polynomial(g.coefficients()));
  return IntegerPolynomial(primitive_integer_coefficients(q));
}

/// Sign of p(num / 2^shift), computed exactly.
inline int sign_at_dyadic(const IntegerPolynomial& p, const Integer& num, unsigned shift) {
  if (p.is_zero()) return 0;
  // 2^(shift*d) p(num/2^shift) = sum a_k num^k 2^(shift (d-k)).
  const int d = p.degree();
  Integer acc = p.leading();
  for (int k = d - 1; k >= 0; --k) {
    acc *= num;
    Integer t = p.coefficients()[k];
    mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), shift * static_cast<unsigned>(d - k));
    acc += t;
  }
  return sgn(acc);
}

/// Real roots of p in the open interval (lo, hi), found as sign changes of
/// the squarefree part on a dyadic grid with `grid` cells and refined by
/// exact bisection to about 1e-15 relative. Roots closer together than the
/// grid spacing can be missed; callers choose the grid accordingly.
inline std::vector<double> real_roots_in(const IntegerPolynomial& p, double lo, double hi, int grid = 8192) {
  if (!(lo < hi)) throw DomainError("real_roots_in: empty interval");
  const IntegerPolynomial q = squarefree_part(p);
  if (q.degree() <= 0) return {};
  constexpr unsigned kShift = 60;
  auto to_num = [](double x) {
    Integer n;
    mpz_set_d(n.get_mpz_t(), std::ldexp(x, static_cast<int>(kShift)));
    return n;
  };
  const Integer a = to_num(lo) + 1, b = to_num(hi) - 1;
  std::vector<Integer> pts;
  pts.reserve(grid + 1);
  for (int i = 0; i <= grid; ++i) pts.push_back(a + (b - a) * i / grid);
  std::vector<double> roots;
  auto refine = [&](Integer l, Integer r, int sl) {
    while (r - l > 1) {
      Integer mid = (l + r) / 2;
      const int sm = sign_at_dyadic(q, mid, kShift);
      if (sm == 0) return std::ldexp(mid.get_d(), -static_cast<int>(kShift));
      if (sm == sl) {
        l = mid;
      } else {
        r = mid;
      }
      if (Integer(r - l).get_d() <= 1e-15 * std::max(std::ldexp(1.0, kShift), std::abs(l.get_d()))) break;
    }
    return std::ldexp(Integer((l + r) / 2).get_d(), -static_cast<int>(kShift));
  };
  int prev = sign_at_dyadic(q, pts[0], kShift);
  if (prev == 0) roots.push_back(std::ldexp(pts[0].get_d(), -static_cast<int>(kShift)));
  for (int i = 1; i <= grid; ++i) {
    const int s = sign_at_dyadic(q, pts[i], kShift);
    if (s == 0) {
      roots.push_back(std::ldexp(pts[i].get_d(), -static_cast<int>(kShift)));
    } else if (prev != 0 && s != prev) {
      roots.push_back(refine(pts[i - 1], pts[i], prev));
    }
    prev = s;
  }
  return roots;
}

}  // namespace monopole
