#pragma once

// Curves of bidegree (k,k) on P1 x P1: psi(w,z) = sum c[i][j] w^i z^j.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "monopole/errors.hpp"
#include "monopole/exact.hpp"
#include "monopole/roots.hpp"

namespace monopole {

template <class C>
struct BidegreeForm {
  int k = 0;
  std::vector<std::vector<C>> c;  // c[i][j] multiplies w^i z^j

  BidegreeForm() = default;
  explicit BidegreeForm(int degree) : k(degree), c(degree + 1, std::vector<C>(degree + 1, C(0))) {
    if (degree < 0) throw DomainError("bidegree must be nonnegative");
  }

  C& operator()(int i, int j) { return c.at(i).at(j); }
  const C& operator()(int i, int j) const { return c.at(i).at(j); }

  friend bool operator==(const BidegreeForm& a, const BidegreeForm& b) { return a.k == b.k && a.c == b.c; }

  bool is_sigma_plus_symmetric() const {
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j < i; ++j) {
        if (!(c[i][j] == c[j][i])) return false;
      }
    }
    return true;
  }

  /// Pull-back under x -> (e x + f)/(g x + h) applied to both w and z,
  /// cleared by (g w + h)^k (g z + h)^k.
  BidegreeForm moebius(const C& e, const C& f, const C& g, const C& h) const {
    // Row polynomials (e x + f)^i (g x + h)^(k-i) for i = 0..k.
    std::vector<std::vector<C>> rows(k + 1);
    for (int i = 0; i <= k; ++i) {
      std::vector<C> p{C(1)};
      auto mul = [&](const C& a1, const C& a0) {
        std::vector<C> r(p.size() + 1, C(0));
        for (std::size_t t = 0; t < p.size(); ++t) {
          r[t] = r[t] + p[t] * a0;
          r[t + 1] = r[t + 1] + p[t] * a1;
        }
        p = std::move(r);
      };
      for (int t = 0; t < i; ++t) mul(e, f);
      for (int t = i; t < k; ++t) mul(g, h);
      rows[i] = std::move(p);
    }
    BidegreeForm out(k);
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) {
        if (detail::coeff_is_zero(c[i][j])) continue;
        for (int a = 0; a <= k; ++a) {
          for (int b = 0; b <= k; ++b) out.c[a][b] = out.c[a][b] + c[i][j] * rows[i][a] * rows[j][b];
        }
      }
    }
    return out;
  }
};

/// Numeric curve. The reality structure is (w,z) -> (-1/conj z, -1/conj w).
struct BidegreeCurve : BidegreeForm<std::complex<double>> {
  using cplx = std::complex<double>;
  using BidegreeForm::BidegreeForm;
  BidegreeCurve() = default;
  BidegreeCurve(const BidegreeForm<cplx>& f) : BidegreeForm(f) {}  // NOLINT(google-explicit-constructor)

  cplx evaluate(cplx w, cplx z) const {
    cplx s = 0.0;
    for (int i = k; i >= 0; --i) {
      cplx row = 0.0;
      for (int j = k; j >= 0; --j) row = row * z + c[i][j];
      s = s * w + row;
    }
    return s;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& row : c) {
      for (const auto& x : row) m = std::max(m, std::abs(x));
    }
    return m;
  }

  BidegreeCurve scaled(cplx s) const {
    BidegreeCurve r(*this);
    for (auto& row : r.c) {
      for (auto& x : row) x *= s;
    }
    return r;
  }

  /// Rescaled so that entry (i,j) equals 1.
  BidegreeCurve normalized_at(int i, int j) const {
    if (std::abs(c.at(i).at(j)) == 0.0) throw DomainError("normalized_at: zero entry");
    return scaled(1.0 / c[i][j]);
  }

  /// Rescaled so that the first entry (row-major) of largest modulus is 1.
  BidegreeCurve normalized() const {
    const double m = max_abs();
    if (m == 0.0) throw DomainError("normalized: zero curve");
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) {
        if (std::abs(c[i][j]) >= m * (1 - 1e-12)) return normalized_at(i, j);
      }
    }
    return *this;
  }

  /// Largest entrywise deviation from `other` after the best projective
  /// rescaling (fixed by the largest entry of *this), relative to max|other|.
  double projective_distance(const BidegreeCurve& other) const {
    if (other.k != k) return INFINITY;
    const double m = max_abs(), mo = other.max_abs();
    if (m == 0.0 || mo == 0.0) return (m == 0.0 && mo == 0.0) ? 0.0 : INFINITY;
    int bi = 0, bj = 0;
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) {
        if (std::abs(c[i][j]) > std::abs(c[bi][bj])) bi = i, bj = j;
      }
    }
    const cplx lambda = other.c[bi][bj] / c[bi][bj];
    double d = 0.0;
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) d = std::max(d, std::abs(other.c[i][j] - lambda * c[i][j]));
    }
    return d / mo;
  }

  double entrywise_distance(const BidegreeCurve& other) const {
    if (other.k != k) return INFINITY;
    double d = 0.0;
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) d = std::max(d, std::abs(other.c[i][j] - c[i][j]));
    }
    return d;
  }

  /// Reality defect: the curve is real iff c[i][j] = phi (-1)^(i+j)
  /// conj(c[k-j][k-i]) for one unimodular phi. Returns the largest
  /// deviation relative to max|c| (phi fitted from the largest entry).
  double reality_defect() const {
    const double m = max_abs();
    if (m == 0.0) return 0.0;
    int bi = 0, bj = 0;
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) {
        if (std::abs(c[i][j]) > std::abs(c[bi][bj])) bi = i, bj = j;
      }
    }
    auto image = [&](int i, int j) { return ((i + j) % 2 ? -1.0 : 1.0) * std::conj(c[k - j][k - i]); };
    const cplx phi = c[bi][bj] / image(bi, bj);
    double d = std::abs(std::abs(phi) - 1.0) * m;
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) d = std::max(d, std::abs(c[i][j] - phi * image(i, j)));
    }
    return d / m;
  }

  bool is_real(double tol = 1e-12) const { return reality_defect() <= tol; }

  double symmetry_defect() const {
    double d = 0.0;
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) d = std::max(d, std::abs(c[i][j] - c[j][i]));
    }
    return d;
  }

  /// Coefficients (low to high) of psi(w, z) as a polynomial in z.
  std::vector<cplx> in_z(cplx w) const {
    std::vector<cplx> p(k + 1, 0.0);
    for (int j = 0; j <= k; ++j) {
      cplx s = 0.0;
      for (int i = k; i >= 0; --i) s = s * w + c[i][j];
      p[j] = s;
    }
    return p;
  }

  /// Roots z of psi(w, z) = 0 for fixed w.
  std::vector<cplx> solve_z(cplx w) const { return polynomial_roots(in_z(w)); }

  /// Coefficients (low to high, degree 2k) of psi(z, z).
  std::vector<cplx> diagonal() const {
    std::vector<cplx> p(2 * k + 1, 0.0);
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) p[i + j] += c[i][j];
    }
    return p;
  }
};

/// p*(z) = z^k conj(p(-1/conj z)) for a polynomial of formal degree k.
inline std::vector<std::complex<double>> reality_dual(const std::vector<std::complex<double>>& p, int k) {
  std::vector<std::complex<double>> r(k + 1, 0.0);
  for (int i = 0; i < static_cast<int>(p.size()) && i <= k; ++i) {
    r[k - i] = std::conj(p[i]) * (i % 2 ? -1.0 : 1.0);
  }
  return r;
}

/// Numeric view of an exact form.
template <class C>
BidegreeCurve to_numeric(const BidegreeForm<C>& f) {
  BidegreeCurve out(f.k);
  for (int i = 0; i <= f.k; ++i) {
    for (int j = 0; j <= f.k; ++j) out.c[i][j] = detail::to_complex(f.c[i][j]);
  }
  return out;
}

}  // namespace monopole
