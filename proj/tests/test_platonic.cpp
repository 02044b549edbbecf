#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "monopole/platonic.hpp"
#include "oracles.hpp"

using namespace monopole;

namespace {

constexpr auto Tetra = PlatonicGroup::Tetrahedral;
constexpr auto Octa = PlatonicGroup::Octahedral;
const double r3 = std::sqrt(3.0);

struct Anchor {
  PlatonicGroup g;
  double m;
  double alpha;
};

// Half-integer masses with closed-form alpha.
std::vector<Anchor> table_anchors() {
  return {{Tetra, 0.5, 1 / r3}, {Tetra, 1.0, 2 - r3}, {Tetra, 1.5, std::sqrt(23 - 4 * std::sqrt(33.0))},
          {Octa, 0.5, 1.0 / 3}, {Octa, 1.0, 1.0 / 7}, {Octa, 1.5, 7 - 4 * r3}};
}

// Coefficients of the curve are proportional to those of `other`.
bool proportional(const BidegreeForm<GaussRationalPoly>& a, const BidegreeForm<GaussRationalPoly>& b) {
  int pi = -1, pj = -1;
  for (int i = 0; i <= a.k && pi < 0; ++i) {
    for (int j = 0; j <= a.k; ++j) {
      if (!a(i, j).is_zero()) {
        pi = i;
        pj = j;
        break;
      }
    }
  }
  for (int i = 0; i <= a.k; ++i) {
    for (int j = 0; j <= a.k; ++j) {
      if (!(a(i, j) * b(pi, pj) == b(i, j) * a(pi, pj))) return false;
    }
  }
  return true;
}

GaussRationalPoly cst(GaussRational c) { return GaussRationalPoly(std::move(c)); }

}  // namespace

TEST(KleinForm, DisplayedCoefficients) {
  EXPECT_EQ(klein_form(KleinGroup::A4), (std::vector<long>{0, 1, 0, 0, 0, -1, 0}));
  EXPECT_EQ(klein_form(KleinGroup::S4), (std::vector<long>{1, 0, 0, 0, 14, 0, 0, 0, 1}));
  const auto a5 = klein_form(KleinGroup::A5);
  ASSERT_EQ(a5.size(), 13u);
  EXPECT_EQ(a5[1], 1);
  EXPECT_EQ(a5[6], 11);
  EXPECT_EQ(a5[11], -1);
  EXPECT_EQ(std::count(a5.begin(), a5.end(), 0), 10);
}

TEST(KleinForm, DiagonalOfTheFamilyIsTheKleinForm) {
  // psi(z, z) for the degree-3 family is 2 i alpha z (z^4 - 1), the edge form.
  const auto d = ansatz_curve(Tetra, 0.9).diagonal();
  const auto ke = klein_form(KleinGroup::A4);
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_LT(std::abs(d[i] + std::complex<double>(0, 1.8) * double(ke[i])), 1e-15);
  // For the degree-4 family, 16 alpha * (face form)/... : psi(z,z) = alpha (z^8 + 14 z^4 + 1).
  const auto d4 = ansatz_curve(Octa, 0.4).diagonal();
  const auto kf = klein_form(KleinGroup::S4);
  for (std::size_t i = 0; i < d4.size(); ++i) EXPECT_LT(std::abs(d4[i] - 0.4 * double(kf[i])), 1e-15);
}

TEST(Ansatz, CoefficientMatrices) {
  const BidegreeCurve t = ansatz_curve(Tetra, 0.5);
  EXPECT_EQ(t(3, 0), 1.0);
  EXPECT_EQ(t(2, 1), -3.0);
  EXPECT_EQ(t(1, 2), 3.0);
  EXPECT_EQ(t(0, 3), -1.0);
  EXPECT_EQ(t(3, 2), std::complex<double>(0, 0.5));
  EXPECT_EQ(t(0, 1), std::complex<double>(0, -0.5));
  const BidegreeCurve o = ansatz_curve(Octa, 0.5);
  EXPECT_EQ(o(4, 0), 1.0);
  EXPECT_EQ(o(3, 1), -4.0 + 2.0);
  EXPECT_EQ(o(2, 2), 6.0 + 3.0);
  EXPECT_EQ(o(4, 4), 0.5);
  EXPECT_EQ(o(0, 0), 0.5);
}

TEST(Ansatz, RealityHoldsExactlyForRealParameters) {
  for (double a : {0.1, 0.9, r3}) EXPECT_LT(ansatz_curve(Tetra, a).reality_defect(), 1e-15);
  for (double a : {0.1, 1.0}) {
    EXPECT_LT(ansatz_curve(Octa, a).reality_defect(), 1e-15);
    EXPECT_LT(ansatz_curve(Octa, a, 0.7).reality_defect(), 1e-15);
  }
  for (auto g : {Tetra, Octa}) {
    EXPECT_GT(evaluate_form(ansatz_form(g), {0.5, 0.2}).reality_defect(), 1e-3);
  }
}

TEST(Ansatz, DomainErrors) {
  EXPECT_THROW(ansatz_curve(Tetra, 0.0), DomainError);
  EXPECT_THROW(ansatz_curve(Tetra, 1.8), DomainError);
  EXPECT_THROW(ansatz_curve(Octa, 1.01), DomainError);
  EXPECT_THROW(ansatz_curve(Tetra, 1.0, 0.3), DomainError);
}

TEST(Ansatz, MasslessEndpointsAreRationalMapCurves) {
  EXPECT_LT(ansatz_curve(Tetra, r3).projective_distance(nullaron_curve(Tetra)), 1e-14);
  EXPECT_LT(ansatz_curve(Octa, 1.0).projective_distance(nullaron_curve(Octa)), 1e-14);
  EXPECT_GT(ansatz_curve(Tetra, 1.0).projective_distance(nullaron_curve(Tetra)), 1e-2);
}

TEST(Ansatz, InvariantUnderTheGroupExactly) {
  using GR = GaussRational;
  const GR i = GR::i();
  const auto t = ansatz_form(Tetra);
  // (w,z) -> (-w,-z), (1/w, 1/z), ((w-i)/(w+i), (z-i)/(z+i))
  EXPECT_TRUE(proportional(t.moebius(cst(-1), cst(0), cst(0), cst(1)), t));
  EXPECT_TRUE(proportional(t.moebius(cst(0), cst(1), cst(1), cst(0)), t));
  EXPECT_TRUE(proportional(t.moebius(cst(1), cst(-i), cst(1), cst(i)), t));
  // Not invariant under the extra order-four rotation.
  EXPECT_FALSE(proportional(t.moebius(cst(i), cst(0), cst(0), cst(1)), t));

  const auto o = ansatz_form(Octa);
  EXPECT_TRUE(proportional(o.moebius(cst(-1), cst(0), cst(0), cst(1)), o));
  EXPECT_TRUE(proportional(o.moebius(cst(0), cst(1), cst(1), cst(0)), o));
  EXPECT_TRUE(proportional(o.moebius(cst(1), cst(-i), cst(1), cst(i)), o));
  EXPECT_TRUE(proportional(o.moebius(cst(i), cst(0), cst(0), cst(1)), o));
  EXPECT_FALSE(t.is_sigma_plus_symmetric());
  EXPECT_TRUE(o.is_sigma_plus_symmetric());
}

TEST(QuotientInvariants, ExactValues) {
  const auto [g2, g3] = quotient_invariants_exact(Tetra, Rational(3));
  EXPECT_EQ(g2, make_rational(73, 12));
  EXPECT_EQ(g3, make_rational(827, 216));
  const EllipticInvariants inv = quotient_invariants(Tetra, r3);
  EXPECT_NEAR(inv.g2(), 73.0 / 12, 1e-14);
  EXPECT_NEAR(inv.g3(), 827.0 / 216, 1e-14);
  EXPECT_THROW(quotient_invariants(Tetra, 0.0), PoleError);
  EXPECT_THROW(quotient_invariants_exact(Octa, Rational(0)), PoleError);
}

TEST(QuotientInvariants, DiscriminantNonzeroOnTheInterval) {
  for (double a = 0.02; a <= r3; a += 0.02) {
    EXPECT_GT(std::abs(quotient_invariants(Tetra, a).discriminant()), 0);
  }
  for (double a = 0.02; a <= 1.0; a += 0.02) {
    const EllipticInvariants inv = quotient_invariants(Octa, a);
    EXPECT_GT(std::abs(inv.discriminant()), 0);
    EXPECT_TRUE(std::isfinite(j_invariant(Octa, a)));
  }
}

TEST(JInvariant, ClosedFormsAreIdentities) {
  EXPECT_TRUE(j_closed_form(Tetra) == j_from_invariants(Tetra));
  EXPECT_TRUE(j_closed_form(Octa) == j_from_invariants(Octa));
}

TEST(JInvariant, ExactValues) {
  // alpha = sqrt(3): 3 * 219^3 / (2^6 3^3 (-24)^3)
  const Rational expected = Rational(3 * 219 * 219 * 219) / Rational(64L * 27 * (-24) * (-24) * (-24));
  EXPECT_EQ(j_invariant_exact(Tetra, Rational(3)), expected);
  EXPECT_NEAR(expected.get_d(), -1.31909, 1e-5);
  EXPECT_NEAR(j_invariant(Tetra, r3), expected.get_d(), 1e-13);
  // Both routes agree at alpha = 1/3 (checked inside, throws otherwise).
  const Rational j = j_invariant_exact(Octa, make_rational(1, 3));
  const auto [g2, g3] = quotient_invariants_exact(Octa, make_rational(1, 3));
  EXPECT_EQ(j, g2 * g2 * g2 / (g2 * g2 * g2 - 27 * g3 * g3));
  for (long p = 1; p <= 9; ++p) {
    EXPECT_NO_THROW(j_invariant_exact(Tetra, make_rational(p, 3)));
    EXPECT_NO_THROW(j_invariant_exact(Octa, make_rational(p, 10)));
  }
}

TEST(PoleX, Values) {
  EXPECT_NEAR(pole_x(Tetra, 1 / r3), -35.0 / 12, 1e-14);
  EXPECT_NEAR(pole_x(Octa, 1.0), -2.0 / 27 - 7.0 / 6, 1e-15);
  for (double a = 0.05; a < r3; a += 0.05) EXPECT_LT(pole_x(Tetra, a), 0);
  EXPECT_EQ(pole_x_function(Tetra)(Rational(3)), make_rational(1, 12) - make_rational(1, 3));
}

TEST(MassRelation, TableAnchorsSatisfyIt) {
  for (const auto& a : table_anchors()) {
    EXPECT_LT(std::abs(mass_relation_residual(a.g, a.alpha, a.m)), 1e-8) << group_name(a.g) << " " << a.m;
    EXPECT_LT(std::abs(pole_relation_residual(a.g, a.alpha, a.m)), 1e-8);
  }
  EXPECT_GT(std::abs(mass_relation_residual(Tetra, 0.5, 0.5)), 1e-3);
  EXPECT_THROW(mass_relation_residual(Tetra, 0.5, 0.0), DomainError);
}

TEST(MassRelation, PoleFractionFromIndependentQuadrature) {
  // int_{-inf}^{x_pole} dx/sqrt(-F) = s |varpi1| with the oracle quadrature,
  // substituting x = x_pole - t^2/(1-t^2) to map to a finite interval.
  for (const auto& a : table_anchors()) {
    const EllipticInvariants inv = quotient_invariants(a.g, a.alpha);
    const double xp = pole_x(a.g, a.alpha);
    auto integrand = [&](double t) {
      if (t >= 1) return 0.0;
      const double s = t / (1 - t * t);
      const double x = xp - s * s;
      const double dxdt = 2 * s * (1 + t * t) / ((1 - t * t) * (1 - t * t));
      return dxdt / std::sqrt(-inv.cubic(x));
    };
    const double J = oracle::integrate(integrand, 0, 1, 1e-13);
    const double w1 = half_periods(inv).varpi1.imag();
    const double s = a.g == Tetra ? 2 / (2 * a.m + 3) : (2 * a.m + 1) / (2 * (a.m + 2));
    EXPECT_NEAR(J / w1, s, 1e-9) << group_name(a.g) << " " << a.m;
  }
}

TEST(AlphaFromMass, TableValues) {
  EXPECT_EQ(alpha_from_mass(Tetra, 0).alpha, r3);
  EXPECT_EQ(alpha_from_mass(Octa, 0).alpha, 1.0);
  for (const auto& a : table_anchors()) {
    const AlphaSolution s = alpha_from_mass(a.g, a.m);
    EXPECT_NEAR(s.alpha, a.alpha, 1e-9) << group_name(a.g) << " " << a.m;
    EXPECT_LT(std::abs(s.residual), 1e-8);
  }
  EXPECT_NEAR(alpha_from_mass(Tetra, 1e-6).alpha, r3, 1e-4);
  EXPECT_NEAR(alpha_from_mass(Tetra, 1.5).alpha, 0.147476824782, 1e-11);
  EXPECT_NEAR(alpha_from_mass(Octa, 1.5).alpha, 0.0717968, 1e-7);
}

TEST(AlphaFromMass, StrictlyDecreasingAndInverse) {
  for (auto g : {Tetra, Octa}) {
    double prev = INFINITY;
    for (int i = 0; i < 50; ++i) {
      const double m = 0.1 + i * (10.0 - 0.1) / 49;
      const double a = alpha_from_mass(g, m).alpha;
      EXPECT_LT(a, prev) << group_name(g) << " " << m;
      prev = a;
      EXPECT_NEAR(mass_from_alpha(g, a), m, 1e-9 * std::max(1.0, m));
    }
  }
}

TEST(CycleIntegers, TableAnchors) {
  auto anchors = table_anchors();
  anchors.push_back({Tetra, 0.0, r3});
  anchors.push_back({Octa, 0.0, 1.0});
  for (const auto& a : anchors) {
    const CycleIntegers c = verify_cycle_integers(a.g, a.alpha, a.m);
    EXPECT_EQ(c.ell1, a.g == Tetra ? 4 : 6);
    EXPECT_EQ(c.ell2, a.g == Tetra ? -8 : -12);
    EXPECT_LT(c.residual, 1e-6);
  }
}

TEST(CycleIntegers, SolvedPairs) {
  for (auto g : {Tetra, Octa}) {
    for (double m : {0.3, 0.8, 2.0, 4.5}) {
      const double a = alpha_from_mass(g, m).alpha;
      const CycleIntegers c = verify_cycle_integers(g, a, m);
      EXPECT_EQ(c.ell1, g == Tetra ? 4 : 6);
      EXPECT_EQ(c.ell2, -2 * c.ell1);
    }
  }
  // A pair off the mass relation gives non-integers.
  EXPECT_THROW(verify_cycle_integers(Tetra, 0.5, 0.5), IntegrityError);
}

TEST(HalfPeriods, RealPartOfVarpiPrimeIsHalfVarpi) {
  for (auto g : {Tetra, Octa}) {
    for (double a = 0.05; a <= alpha_max(g); a += 0.05) {
      const HalfPeriods hp = half_periods(quotient_invariants(g, a));
      EXPECT_NEAR(hp.varpi_prime.real(), hp.varpi / 2, 1e-10 * hp.varpi);
      EXPECT_LT(std::abs(hp.varpi1.real()), 1e-10 * hp.varpi);
    }
  }
}

TEST(InvariantsAtPoint, SampledWeierstrassResidual) {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  for (auto g : {Tetra, Octa}) {
    for (double a : {0.2, 0.6, g == Tetra ? 1.5 : 0.95}) {
      const EllipticInvariants inv = quotient_invariants(g, a);
      const BidegreeCurve c = ansatz_curve(g, a);
      for (int n = 0; n < 50; ++n) {
        const std::complex<double> w = std::polar(1.0, angle(rng));
        for (auto z : c.solve_z(w)) {
          const auto [x, y] = invariants_at_point(g, a, w, z);
          EXPECT_LT(std::abs(y * y - inv.cubic(x)), 1e-9 * (1 + std::pow(std::abs(x), 3)));
          if (g == Tetra) {
            EXPECT_LT(std::abs(tetra_invariants(w, z).v - std::complex<double>(0, 1 / a)), 1e-9);
          }
        }
      }
    }
  }
}

TEST(InvariantsAtPoint, PoleImages) {
  const double a = 0.8;
  const std::complex<double> rho = std::polar(1.0, std::numbers::pi / 4);
  const std::complex<double> p1 = rho * std::sqrt(a);
  ASSERT_LT(std::abs(ansatz_curve(Tetra, a).evaluate(p1, 0.0)), 1e-14);
  const auto [x, y] = invariants_at_point(Tetra, a, p1, 0.0);
  EXPECT_NEAR(x.real(), 1.0 / 12 - 1 / (a * a), 1e-13);
  EXPECT_NEAR(std::abs(y), 2 / a * (1 + 1 / (a * a)), 1e-12);
  EXPECT_THROW(invariants_at_point(Tetra, a, 0.3, 0.3), PoleError);
}

TEST(Euclid, ConstantAndPeriod) {
  const EuclidTetra e = euclid_limit_tetra();
  // Gamma(1/3) from the Euler integral with the oracle quadrature.
  const double g = 3 * oracle::integrate([](double s) { return std::exp(-s * s * s); }, 0, 9);
  EXPECT_NEAR(e.gamma_third, g, 1e-12 * g);
  EXPECT_NEAR(e.alpha_bar, std::pow(g, 9) / (64 * std::pow(std::numbers::pi, 3)), 1e-11);
  EXPECT_NEAR(e.alpha_bar, 3.58125422573825, 1e-12);
  EXPECT_NEAR(e.varpi1.imag(), e.alpha_bar, 1e-9);
  EXPECT_NEAR(std::abs(e.varpi1.real()), 0, 1e-9);
  EXPECT_LT(std::abs(std::conj(e.gamma_expression) - e.varpi1), 1e-10);
  EXPECT_LT(e.richardson_rel_error, 1e-2);
  EXPECT_EQ(e.curve[5], std::complex<double>(0, 2 * e.alpha_bar));
  EXPECT_EQ(e.curve[1], std::complex<double>(0, -2 * e.alpha_bar));
}
