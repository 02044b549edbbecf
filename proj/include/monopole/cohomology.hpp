#pragma once

// Multiplication by the curve polynomial psi between Cech cohomology
// groups on P1 x P1, represented by Laurent monomials, and the exact
// determinant criterion that picks out alpha at half-integer masses.

#include <complex>
#include <sstream>
#include <utility>
#include <vector>

#include "monopole/curve.hpp"
#include "monopole/errors.hpp"
#include "monopole/exact.hpp"
#include "monopole/platonic.hpp"
#include "monopole/roots.hpp"

namespace monopole {

/// Matrix of multiplication by psi at level r. Columns are the domain
/// monomials w^-i z^s (1 <= i <= k+r+1, 0 <= s <= r), rows the codomain
/// monomials w^-i' z^j (1 <= i' <= r+1, 0 <= j <= k+r).
struct CechMatrix {
  PlatonicGroup group = PlatonicGroup::Tetrahedral;
  int r = 0;
  std::vector<std::pair<int, int>> rows;  // (i', j)
  std::vector<std::pair<int, int>> cols;  // (i, s)
  std::vector<std::vector<GaussRationalPoly>> entries;

  int size() const { return static_cast<int>(rows.size()); }
};

inline CechMatrix multiplication_matrix(PlatonicGroup g, int r) {
  if (r < 0) throw DomainError("multiplication_matrix: level must be nonnegative");
  const BidegreeForm<GaussRationalPoly> psi = ansatz_form(g);
  const int k = psi.k;
  CechMatrix m;
  m.group = g;
  m.r = r;
  for (int ip = 1; ip <= r + 1; ++ip) {
    for (int j = 0; j <= k + r; ++j) m.rows.emplace_back(ip, j);
  }
  for (int i = 1; i <= k + r + 1; ++i) {
    for (int s = 0; s <= r; ++s) m.cols.emplace_back(i, s);
  }
  const int n = m.size();
  m.entries.assign(n, std::vector<GaussRationalPoly>(n));
  for (int c = 0; c < n; ++c) {
    const auto [i, s] = m.cols[c];
    for (int row = 0; row < n; ++row) {
      // w^(a-i) z^(b+s) = w^-i' z^j  <=>  a = i - i', b = j - s.
      const auto [ip, j] = m.rows[row];
      const int a = i - ip, b = j - s;
      if (a >= 0 && a <= k && b >= 0 && b <= k) m.entries[row][c] = psi(a, b);
    }
  }
  return m;
}

namespace detail {

template <class C>
Polynomial<C> bareiss_det(std::vector<std::vector<Polynomial<C>>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return Polynomial<C>(C(1));
  Polynomial<C> prev(C(1));
  bool negate = false;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      int p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divide_exact(prev);
      }
      a[i][k] = {};
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

inline bool is_gauss_integral(const GaussRationalPoly& p) {
  for (const auto& c : p.coefficients()) {
    if (c.re.get_den() != 1 || c.im.get_den() != 1) return false;
  }
  return true;
}

}  // namespace detail

/// Exact determinant by fraction-free elimination. Integral entries are
/// eliminated over Z[i][alpha], others over Q(i)[alpha].
inline GaussRationalPoly det_poly(const CechMatrix& m) {
  bool integral = true;
  for (const auto& row : m.entries) {
    for (const auto& e : row) integral = integral && detail::is_gauss_integral(e);
  }
  if (!integral) return detail::bareiss_det(m.entries);
  using GIP = Polynomial<GaussInteger>;
  std::vector<std::vector<GIP>> a(m.size(), std::vector<GIP>(m.size()));
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      std::vector<GaussInteger> v;
      for (const auto& c : m.entries[i][j].coefficients()) v.emplace_back(c.re.get_num(), c.im.get_num());
      a[i][j] = GIP(std::move(v));
    }
  }
  const Polynomial<GaussInteger> det = detail::bareiss_det(std::move(a));
  std::vector<GaussRational> out;
  for (const auto& c : det.coefficients()) out.emplace_back(Rational(c.re), Rational(c.im));
  return GaussRationalPoly(std::move(out));
}

/// p divided by the unit u in {1, i, -1, -i} that makes its leading
/// coefficient real and positive, as a rational polynomial; throws
/// IntegrityError if no unit makes every coefficient real.
inline RationalPolynomial real_form(const GaussRationalPoly& p) {
  if (p.is_zero()) return {};
  const GaussRational lead = p.leading();
  GaussRational unit = sgn(lead.re) != 0 ? GaussRational(sgn(lead.re)) : GaussRational(0, sgn(lead.im));
  std::vector<Rational> v;
  for (const auto& c : p.coefficients()) {
    const GaussRational q = c / unit;
    if (sgn(q.im) != 0) throw IntegrityError("real_form: polynomial is not a unit multiple of a real one");
    v.push_back(q.re);
  }
  return RationalPolynomial(std::move(v));
}

/// Result of the half-integer mass extraction at level r (m = r/2).
struct HalfIntegerAlpha {
  int r = 0;
  RationalPolynomial determinant;  // det Psi_r up to a unit
  RationalPolynomial new_factor;   // squarefree part of det Psi_r with the roots of lower levels removed
  std::vector<double> candidates;  // real roots of new_factor in the alpha interval
  double alpha = 0.0;              // candidate matching the mass relation
  double numeric_alpha = 0.0;      // alpha_from_mass(group, r/2)
};

inline HalfIntegerAlpha half_integer_alpha(PlatonicGroup g, int r) {
  if (r < 1) throw DomainError("half_integer_alpha: level must be positive");
  HalfIntegerAlpha h;
  h.r = r;
  h.determinant = real_form(det_poly(multiplication_matrix(g, r)));
  RationalPolynomial q = squarefree_part(h.determinant);
  for (int lower = 0; lower < r; ++lower) {
    const RationalPolynomial d = real_form(det_poly(multiplication_matrix(g, lower)));
    for (RationalPolynomial c = gcd(q, d); c.degree() > 0; c = gcd(q, d)) q = q.divide_exact(c);
  }
  h.new_factor = q.scaled(Rational(1) / q.leading());
  h.numeric_alpha = alpha_from_mass(g, 0.5 * r).alpha;
  if (h.new_factor.degree() > 0) {
    h.candidates = real_roots_in(IntegerPolynomial(primitive_integer_coefficients(h.new_factor)), 0.0, alpha_max(g));
  }
  double best = INFINITY;
  for (double c : h.candidates) {
    if (std::abs(c - h.numeric_alpha) < best) {
      best = std::abs(c - h.numeric_alpha);
      h.alpha = c;
    }
  }
  if (!(best <= 1e-8)) {
    std::ostringstream os;
    os << "half_integer_alpha: no root of the level-" << r << " determinant matches alpha_from_mass = " << h.numeric_alpha;
    throw IntegrityError(os.str());
  }
  return h;
}

namespace detail {

// Monic gcd over Q(i), with the cofactor s such that s a = g mod b.
inline std::pair<GaussRationalPoly, GaussRationalPoly> gcd_with_inverse(const GaussRationalPoly& a,
                                                                        const GaussRationalPoly& b) {
  GaussRationalPoly r0 = a, r1 = b, s0(GaussRational(1)), s1;
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    GaussRationalPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const GaussRational inv = GaussRational(1) / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv)};
}

inline GaussRationalPoly to_gauss(const RationalPolynomial& p) {
  std::vector<GaussRational> v;
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return GaussRationalPoly(std::move(v));
}

}  // namespace detail

struct RankAtRoot {
  int rank = 0;
  int nullity = 0;
  GaussRationalPoly modulus;  // factor of the input polynomial the elimination settled on
};

/// Rank of the matrix at the root of f nearest `root`, by elimination over
/// Q(i)[alpha]/(f). When a pivot shares a factor with f, f is split and
/// the factor vanishing at `root` is kept, so f need not be irreducible.
inline RankAtRoot rank_at_root(const CechMatrix& m, const RationalPolynomial& f, double root) {
  if (f.degree() < 1) throw DomainError("rank_at_root: modulus must be nonconstant");
  GaussRationalPoly mod = detail::to_gauss(squarefree_part(f));
  for (;;) {
    bool restart = false;
    std::vector<std::vector<GaussRationalPoly>> a(m.size(), std::vector<GaussRationalPoly>(m.size()));
    for (int i = 0; i < m.size(); ++i) {
      for (int j = 0; j < m.size(); ++j) a[i][j] = m.entries[i][j].divmod(mod).second;
    }
    int rank = 0;
    const int n = m.size();
    for (int col = 0; col < n && rank < n && !restart; ++col) {
      int p = rank;
      while (p < n && a[p][col].is_zero()) ++p;
      if (p == n) continue;
      std::swap(a[rank], a[p]);
      auto [g, inv] = detail::gcd_with_inverse(a[rank][col], mod);
      if (g.degree() > 0) {
        // Split mod = g * (mod/g) and keep the part vanishing at the root.
        const GaussRationalPoly other = mod.divide_exact(g);
        mod = std::abs(g.evaluate(root)) <= std::abs(other.evaluate(root)) ? g : other;
        restart = true;
        break;
      }
      for (int j = col; j < n; ++j) a[rank][j] = (a[rank][j] * inv).divmod(mod).second;
      for (int i = 0; i < n; ++i) {
        if (i == rank || a[i][col].is_zero()) continue;
        const GaussRationalPoly factor = a[i][col];
        for (int j = col; j < n; ++j) a[i][j] = (a[i][j] - factor * a[rank][j]).divmod(mod).second;
      }
      ++rank;
    }
    if (restart) continue;
    RankAtRoot out;
    out.rank = rank;
    out.nullity = n - rank;
    out.modulus = mod;
    return out;
  }
}

}  // namespace monopole
