#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>

#include "monopole/cohomology.hpp"

using namespace monopole;

namespace {

constexpr auto Tetra = PlatonicGroup::Tetrahedral;
constexpr auto Octa = PlatonicGroup::Octahedral;

RationalPolynomial rp(std::vector<long> c) {
  std::vector<Rational> v(c.begin(), c.end());
  return RationalPolynomial(std::move(v));
}

const RationalPolynomial A = rp({0, 1});

bool equal_up_to_sign(const RationalPolynomial& a, const RationalPolynomial& b) { return a == b || a == -b; }

RationalPolynomial det_real(PlatonicGroup g, int r) { return real_form(det_poly(multiplication_matrix(g, r))); }

bool divides(const RationalPolynomial& d, const RationalPolynomial& p) { return p.divmod(d).second.is_zero(); }

GaussRationalPoly gp(std::vector<GaussRational> c) { return GaussRationalPoly(std::move(c)); }

}  // namespace

TEST(CechMatrix, Dimensions) {
  for (auto g : {Tetra, Octa}) {
    for (int r = 0; r <= 3; ++r) {
      const CechMatrix m = multiplication_matrix(g, r);
      EXPECT_EQ(m.size(), (r + 1) * (charge(g) + r + 1));
      EXPECT_EQ(m.cols.size(), m.rows.size());
      EXPECT_EQ(m.entries.size(), m.rows.size());
    }
  }
  EXPECT_THROW(multiplication_matrix(Tetra, -1), DomainError);
}

TEST(CechMatrix, LevelZeroEntryMultisets) {
  const GaussRational i = GaussRational::i();
  const auto ia = gp({0, i}), mia = gp({0, -i});
  std::vector<GaussRationalPoly> tetra{gp({1}), gp({1}), gp({3}), gp({3}), ia, ia, mia, mia};
  const auto alpha = gp({0, 1});
  std::vector<GaussRationalPoly> octa{gp({1}), gp({1}), alpha, alpha, gp({4, -4}), gp({4, -4}), gp({6, 6})};
  for (auto [g, expected] : {std::pair{Tetra, tetra}, std::pair{Octa, octa}}) {
    // Basis vectors rescaled by (-1)^j in z^j, which is the printed sign choice.
    const CechMatrix m = multiplication_matrix(g, 0);
    std::vector<GaussRationalPoly> nonzero;
    for (int a = 0; a < m.size(); ++a) {
      for (int b = 0; b < m.size(); ++b) {
        const auto& e = m.entries[a][b];
        if (!e.is_zero()) nonzero.push_back((m.rows[a].second + m.cols[b].second) % 2 ? -e : e);
      }
    }
    ASSERT_EQ(nonzero.size(), expected.size()) << group_name(g);
    for (const auto& e : expected) {
      auto it = std::find(nonzero.begin(), nonzero.end(), e);
      ASSERT_NE(it, nonzero.end()) << group_name(g) << " missing " << to_string(e);
      nonzero.erase(it);
    }
  }
}

TEST(Determinant, TetrahedralIdentities) {
  const RationalPolynomial three = rp({3, 0, -1}), one = rp({1, 0, -3});
  EXPECT_TRUE(equal_up_to_sign(det_real(Tetra, 0), three * three));
  EXPECT_TRUE(equal_up_to_sign(det_real(Tetra, 1), rp({4}) * one * one * three * three));
  const RationalPolynomial f = rp({5, 0, 1}) * one * rp({1, -4, 1}) * rp({1, 4, 1});
  EXPECT_TRUE(equal_up_to_sign(det_real(Tetra, 2), rp({4}) * f * f));
}

TEST(Determinant, OctahedralIdentities) {
  const RationalPolynomial p = rp({1, 1}), q = rp({1, -1});
  EXPECT_TRUE(equal_up_to_sign(det_real(Octa, 0), rp({96}) * p.pow(2) * q.pow(3)));
  const RationalPolynomial d1 = rp({16}) * rp({1, 5}).pow(2) * rp({5, 1}).pow(3) * rp({-1, 3}).pow(3) * rp({-1, 1}).pow(4);
  EXPECT_TRUE(equal_up_to_sign(det_real(Octa, 1), d1));
}

TEST(Determinant, InvariantUnderBasisPermutation) {
  std::mt19937 rng(7);
  for (auto g : {Tetra, Octa}) {
    for (int r = 0; r <= 2; ++r) {
      const CechMatrix m = multiplication_matrix(g, r);
      CechMatrix p = m;
      std::vector<int> rows(m.size()), cols(m.size());
      std::iota(rows.begin(), rows.end(), 0);
      std::iota(cols.begin(), cols.end(), 0);
      std::shuffle(rows.begin(), rows.end(), rng);
      std::shuffle(cols.begin(), cols.end(), rng);
      for (int a = 0; a < m.size(); ++a) {
        p.rows[a] = m.rows[rows[a]];
        p.cols[a] = m.cols[cols[a]];
        for (int b = 0; b < m.size(); ++b) p.entries[a][b] = m.entries[rows[a]][cols[b]];
      }
      const GaussRationalPoly d = det_poly(m), dp = det_poly(p);
      EXPECT_TRUE(d == dp || d == -dp) << group_name(g) << " " << r;
    }
  }
}

TEST(HalfIntegerAlpha, TableValuesFromNewFactors) {
  struct Case {
    PlatonicGroup g;
    int r;
    RationalPolynomial factor;
    double alpha;
  };
  const std::vector<Case> cases{
      {Tetra, 1, rp({1, 0, -3}), 1 / std::sqrt(3.0)},
      {Tetra, 2, rp({1, -4, 1}), 2 - std::sqrt(3.0)},
      {Tetra, 3, rp({1, 0, -46, 0, 1}), std::sqrt(23 - 4 * std::sqrt(33.0))},
      {Octa, 1, rp({-1, 3}), 1.0 / 3},
      {Octa, 2, rp({-1, 7}), 1.0 / 7},
      {Octa, 3, rp({1, -14, 1}), 7 - 4 * std::sqrt(3.0)},
  };
  for (const auto& c : cases) {
    const HalfIntegerAlpha h = half_integer_alpha(c.g, c.r);
    EXPECT_TRUE(divides(c.factor, h.new_factor)) << group_name(c.g) << " " << c.r << ": " << to_string(h.new_factor);
    EXPECT_NEAR(h.alpha, c.alpha, 1e-12);
    EXPECT_NEAR(h.numeric_alpha, c.alpha, 1e-9);
    EXPECT_LT(std::abs(c.factor.evaluate(h.alpha)), 1e-12);
  }
  EXPECT_THROW(half_integer_alpha(Tetra, 0), DomainError);
}

TEST(HalfIntegerAlpha, KernelAtTheAlgebraicRoot) {
  for (auto [g, r, f] : {std::tuple{Tetra, 1, rp({1, 0, -3})}, {Tetra, 2, rp({1, -4, 1})}, {Octa, 1, rp({-1, 3})}}) {
    const double root = real_roots_in(IntegerPolynomial(primitive_integer_coefficients(f)), 0, alpha_max(g)).front();
    const RankAtRoot k = rank_at_root(multiplication_matrix(g, r), f, root);
    EXPECT_GE(k.nullity, 1) << group_name(g) << " " << r;
    EXPECT_EQ(k.rank + k.nullity, multiplication_matrix(g, r).size());
  }
  // Full rank away from the roots.
  const RankAtRoot full = rank_at_root(multiplication_matrix(Tetra, 1), rp({-1, 2}), 0.5);
  EXPECT_EQ(full.nullity, 0);
}

TEST(HalfIntegerAlpha, DeterminantAlongTheMassCurve) {
  for (auto g : {Tetra, Octa}) {
    for (int r = 1; r <= 2; ++r) {
      const RationalPolynomial d = det_real(g, r);
      const RationalPolynomial scaled = d.scaled(Rational(1) / d.leading());
      const double at_root = alpha_from_mass(g, 0.5 * r).alpha;
      EXPECT_LT(std::abs(scaled.evaluate(at_root)), 1e-6) << group_name(g) << " " << r;
      for (int n = 1; n <= 8; ++n) {
        const double a = alpha_from_mass(g, 0.5 * r + 0.25 * n).alpha;
        EXPECT_GT(std::abs(scaled.evaluate(a)), 1e-8) << group_name(g) << " r=" << r << " n=" << n;
      }
    }
  }
}
