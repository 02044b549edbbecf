#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "monopole/cohomology.hpp"
#include "monopole/division.hpp"

using namespace monopole;

namespace {

constexpr auto Tetra = PlatonicGroup::Tetrahedral;
constexpr auto Octa = PlatonicGroup::Octahedral;

IntegerPolynomial ip(std::vector<long> c) {
  std::vector<Integer> v(c.begin(), c.end());
  return IntegerPolynomial(std::move(v));
}

bool divides(const IntegerPolynomial& d, const IntegerPolynomial& p) {
  return to_rational_polynomial(p.coefficients()).divisible_by(to_rational_polynomial(d.coefficients()));
}

}  // namespace

TEST(ParseMass, AcceptsFractionsAndIntegers) {
  EXPECT_EQ(parse_mass("1/3"), make_rational(1, 3));
  EXPECT_EQ(parse_mass("4/6"), make_rational(2, 3));
  EXPECT_EQ(parse_mass("2"), Rational(2));
  EXPECT_THROW(parse_mass("abc"), DomainError);
  EXPECT_THROW(parse_mass("1/0"), DomainError);
}

TEST(DivisionPoint, OrdersAndNumerators) {
  auto check = [](PlatonicGroup g, long p, long q, long n, long k1) {
    const DivisionPoint d = division_point(g, make_rational(p, q));
    EXPECT_EQ(d.n, n) << group_name(g) << " " << p << "/" << q;
    EXPECT_EQ(d.k1, k1) << group_name(g) << " " << p << "/" << q;
    EXPECT_EQ(std::gcd(d.n, d.k1), 1);
  };
  check(Tetra, 1, 3, 11, 3);
  check(Tetra, 1, 2, 4, 1);
  check(Tetra, 1, 1, 5, 1);
  check(Tetra, 3, 2, 6, 1);
  check(Octa, 1, 2, 5, 3);
  check(Octa, 1, 1, 2, 1);
  check(Octa, 3, 2, 7, 3);
  check(Octa, 1, 3, 14, 9);
  EXPECT_THROW(division_point(Tetra, Rational(0)), DomainError);
  EXPECT_THROW(division_point(Tetra, make_rational(-1, 2)), DomainError);
}

TEST(AlphaPolynomial, DivisionPointMatchesThePoleFraction) {
  // 2 k1/n equals the fraction of the imaginary period at which the pole sits.
  for (auto [g, m] : {std::pair{Tetra, make_rational(1, 3)}, {Octa, make_rational(3, 2)}, {Octa, make_rational(2, 5)}}) {
    const DivisionPoint d = division_point(g, m);
    const double x = m.get_d();
    const double s = g == Tetra ? 2 / (2 * x + 3) : 3 / (x + 2);
    EXPECT_NEAR(2.0 * d.k1 / d.n, s, 1e-15);
  }
}

TEST(AlphaPolynomial, TetrahedralOneThird) {
  const AlphaPolynomial a = alpha_polynomial(Tetra, make_rational(1, 3));
  EXPECT_EQ(a.point.n, 11);
  const IntegerPolynomial minimal = ip({-11, 0, -715, 0, 866, 0, 506, 0, -39, 0, 1});
  EXPECT_TRUE(divides(minimal, a.poly));
  for (int k = 1; k <= a.poly.degree(); k += 2) EXPECT_EQ(sgn(a.poly.coefficients()[k]), 0);
  const RationalMassAlpha r = alpha_for_rational_mass(Tetra, make_rational(1, 3));
  EXPECT_NEAR(r.alpha, 0.791875, 1e-5);
  EXPECT_LT(std::abs(r.residual), 1e-10);
  EXPECT_LT(r.division_residual, 1e-6);
  EXPECT_NEAR(r.alpha, alpha_from_mass(Tetra, 1.0 / 3).alpha, 1e-8);
  const auto roots = real_roots_in(minimal, 0, std::sqrt(3.0));
  ASSERT_FALSE(roots.empty());
  EXPECT_NE(std::find_if(roots.begin(), roots.end(), [&](double x) { return std::abs(x - r.alpha) < 1e-12; }),
            roots.end());
}

TEST(AlphaPolynomial, HalfIntegerFactors) {
  EXPECT_TRUE(divides(ip({-1, 0, 3}), alpha_polynomial(Tetra, make_rational(1, 2)).poly));
  EXPECT_TRUE(divides(ip({1, -4, 1}), alpha_polynomial(Tetra, Rational(1)).poly));
  EXPECT_TRUE(divides(ip({-1, 3}), alpha_polynomial(Octa, make_rational(1, 2)).poly));
  EXPECT_TRUE(divides(ip({-1, 7}), alpha_polynomial(Octa, Rational(1)).poly));
  EXPECT_TRUE(divides(ip({1, -14, 1}), alpha_polynomial(Octa, make_rational(3, 2)).poly));
}

TEST(AlphaPolynomial, BudgetIsEnforced) {
  EXPECT_THROW(alpha_polynomial(Tetra, make_rational(1, 3), 10), ResourceError);
  EXPECT_NO_THROW(alpha_polynomial(Tetra, make_rational(1, 3), 11));
  EXPECT_THROW(alpha_polynomial(Tetra, make_rational(7, 5)), ResourceError);
}

TEST(AlphaPolynomial, OctahedralRootSelectionAvoidsSpuriousZeros) {
  const RationalMassAlpha r = alpha_for_rational_mass(Octa, make_rational(3, 2));
  EXPECT_NEAR(r.alpha, 7 - 4 * std::sqrt(3.0), 1e-12);
  EXPECT_GE(r.candidates.size(), 2u);
  EXPECT_LT(r.pole_residual, 1e-10);
}

TEST(TriOracle, HalfIntegerMassesAgree) {
  for (auto g : {Tetra, Octa}) {
    for (int r = 1; r <= 3; ++r) {
      const double m = 0.5 * r;
      const double numeric = alpha_from_mass(g, m).alpha;
      const double cohomology = half_integer_alpha(g, r).alpha;
      const RationalMassAlpha division = alpha_for_rational_mass(g, make_rational(r, 2));
      EXPECT_NEAR(numeric, cohomology, 1e-8) << group_name(g) << " " << m;
      EXPECT_NEAR(numeric, division.alpha, 1e-8) << group_name(g) << " " << m;
      EXPECT_LT(division.division_residual, 1e-6);
    }
  }
}

TEST(TriOracle, OtherRationalMasses) {
  for (auto [g, p, q] : {std::tuple{Tetra, 2L, 3L}, {Tetra, 1L, 4L}, {Octa, 2L, 5L}, {Octa, 3L, 4L}}) {
    const RationalMassAlpha r = alpha_for_rational_mass(g, make_rational(p, q));
    EXPECT_NEAR(r.alpha, alpha_from_mass(g, double(p) / q).alpha, 1e-8) << group_name(g) << " " << p << "/" << q;
    EXPECT_LT(r.division_residual, 1e-6);
  }
}
