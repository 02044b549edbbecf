#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "monopole/charge2.hpp"
#include "oracles.hpp"

using namespace monopole;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> mass_grid() {
  std::vector<double> v;
  for (int i = 0; i < 10; ++i) v.push_back(0.1 + i * (4.0 - 0.1) / 9);
  return v;
}

std::vector<double> kappa_grid() {
  std::vector<double> v;
  for (int i = 0; i < 10; ++i) v.push_back(0.05 + i * 0.1);
  return v;
}

// Incidence: the geodesic from boundary point a to boundary point b (in
// C) passes through (x1,x2,x3) iff the point lies on the semicircle over
// the segment [a, b] in the vertical plane containing it.
bool geodesic_through(std::complex<double> a, std::complex<double> b, double x1, double x2, double x3) {
  const std::complex<double> c = 0.5 * (a + b), p(x1, x2);
  const double r = std::abs(b - a) / 2;
  const double t = std::abs(std::imag(std::conj(b - a) * (p - a)));  // collinearity
  return t < 1e-9 && std::abs(std::norm(p - c) + x3 * x3 - r * r) < 1e-9;
}

}  // namespace

TEST(StarLine, Examples) {
  const BidegreeCurve diag = star_line(0, 0, 1);
  EXPECT_EQ(diag(1, 0), -1.0);
  EXPECT_EQ(diag(0, 1), 1.0);
  EXPECT_EQ(diag(1, 1), 0.0);
  EXPECT_EQ(diag(0, 0), 0.0);

  const BidegreeCurve s = star_line(0, 0, 2.5);
  EXPECT_EQ(s(1, 0), -6.25);  // z = x3^2 w

  const BidegreeCurve t = star_line(1, 0, 1);
  EXPECT_EQ(t(1, 1), 1.0);
  EXPECT_EQ(t(1, 0), -2.0);
  EXPECT_EQ(t(0, 1), 1.0);
  EXPECT_EQ(t(0, 0), -1.0);
  EXPECT_THROW(star_line(0, 0, 0), DomainError);
}

TEST(StarLine, SampledGeodesicsPassThroughThePoint) {
  // A pair (w, z) on the star corresponds to a geodesic with end points
  // z and -1/conj(w) (the antipodal convention of the reality structure).
  const double x1 = 1, x2 = 0, x3 = 1;
  const BidegreeCurve t = star_line(x1, x2, x3);
  for (double w : {0.3, -1.7, 2.2}) {
    auto zs = t.solve_z(w);
    ASSERT_EQ(zs.size(), 1u);
    EXPECT_TRUE(geodesic_through(zs[0], -1.0 / std::conj(std::complex<double>(w)), x1, x2, x3));
  }
}

TEST(CurveFromMass, AxialBoundary) {
  const BidegreeCurve c = curve_from_mass(1.0, 0.0).normalized_at(2, 0);
  EXPECT_NEAR(c(1, 1).real(), -std::sqrt(2.0), 1e-15);
  EXPECT_EQ(c(0, 2), 1.0);
  EXPECT_EQ(c(2, 2), 0.0);
}

TEST(CurveFromMass, MasslessBoundary) {
  const BidegreeCurve c = curve_from_mass(0.0, 0.5);
  EXPECT_EQ(c(2, 2), 0.5);
  EXPECT_EQ(c(0, 0), 0.5);
  EXPECT_EQ(c(1, 1), 0.0);
  EXPECT_EQ(c(2, 0), -1.0);
  EXPECT_EQ(c.projective_distance(limit_nullaron(0.5)), 0.0);
}

TEST(CurveFromMass, UnitMassBisectionForm) {
  for (double kappa : {0.1, 0.3, 0.6, 0.9}) {
    const double kp = std::sqrt(1 - kappa * kappa);
    const BidegreeCurve expected = charge2_curve(kappa / (1 + kp), 2 * kp / std::sqrt(1 + kp), -1);
    EXPECT_LT(curve_from_mass(1.0, kappa).entrywise_distance(expected), 1e-12) << kappa;
  }
  const BidegreeCurve c = curve_from_mass(1.0, 0.6);
  EXPECT_NEAR(c(2, 2).real(), 1.0 / 3, 1e-13);
  EXPECT_NEAR(c(1, 1).real(), 1.6 / std::sqrt(1.8), 1e-13);
}

TEST(CurveFromMass, DomainErrors) {
  EXPECT_THROW(curve_from_mass(-0.1, 0.5), DomainError);
  EXPECT_THROW(curve_from_mass(1, 1.0), DomainError);
  EXPECT_THROW(curve_from_mass(1, -0.2), DomainError);
}

TEST(CurveFromMass, SymmetryAndRealityOnGrid) {
  for (double m : mass_grid()) {
    for (double kappa : kappa_grid()) {
      const BidegreeCurve c = curve_from_mass(m, kappa);
      EXPECT_EQ(c.symmetry_defect(), 0.0);
      EXPECT_LT(c.reality_defect(), 1e-12);
    }
  }
}

TEST(CurveFromMass, DiagonalRootsComeInReciprocalPairs) {
  for (double m : mass_grid()) {
    for (double kappa : kappa_grid()) {
      const BidegreeCurve c = curve_from_mass(m, kappa);
      auto roots = polynomial_roots(c.diagonal());
      ASSERT_EQ(roots.size(), 4u);
      std::sort(roots.begin(), roots.end(), [](auto a, auto b) { return std::abs(a) < std::abs(b); });
      const double lambda = derived_params(m, kappa).lambda;
      for (auto r : roots) EXPECT_LT(std::abs(r.imag()), 1e-8);
      EXPECT_NEAR(std::abs(roots[0]), std::sqrt(lambda), 1e-8);
      EXPECT_NEAR(std::abs(roots[3]), 1 / std::sqrt(lambda), 1e-8);
      EXPECT_LT(std::abs(roots[0] * roots[3]) - 1, 1e-8);
      EXPECT_LT(std::abs(std::abs(roots[0] * roots[1] * roots[2] * roots[3]) - 1), 1e-10);
    }
  }
}

TEST(CurveFromMass, ContinuityAtTheBoundaries) {
  for (double m : {0.0, 0.5, 1.0, 3.0}) {
    EXPECT_LT(limit_axial(m).entrywise_distance(curve_from_mass(m, 1e-7).normalized_at(2, 0)), 1e-6) << m;
  }
  // kappa -> 1 approaches the separated pair after normalization (slowly, like 1/log).
  for (double m : {0.5, 1.0, 2.0}) {
    double prev = INFINITY;
    for (double eps : {1e-3, 1e-6, 1e-9, 1e-12}) {
      const double d = curve_from_mass(m, 1 - eps).normalized_at(2, 2).entrywise_distance(limit_separation());
      EXPECT_LT(d, prev) << m;
      prev = d;
    }
    EXPECT_LT(prev, 0.05) << m;
  }
}

TEST(DerivedParams, InvariantsOnGrid) {
  for (double m : mass_grid()) {
    for (double kappa : kappa_grid()) {
      const Charge2Derived d = derived_params(m, kappa);
      EXPECT_GT(d.u, d.v);
      EXPECT_GT(d.v, 2);
      EXPECT_GT(d.alpha, 1);
      EXPECT_GT(d.u * d.u - 2 * d.u * d.v + 4, 0);
      EXPECT_NEAR(d.u - d.v, d.alpha * d.beta * d.beta, 1e-10 * d.u);
      EXPECT_GT(d.lambda, 0);
      EXPECT_LT(d.lambda, 1);
      EXPECT_GT(d.Lambda_sq, 0);
      // lambda + 1/lambda against the curve coefficients, via the ODE oracle.
      const auto j = oracle::jacobi_ode(d.rho, kappa);
      const double s = 2 * (1 - j.cn * j.dn) / (kappa * j.sn * j.sn);
      EXPECT_GT(s, 2);
      EXPECT_NEAR(d.lambda + 1 / d.lambda, s, 1e-9 * s);
      // Lambda^2 = (2/kappa) cs(rho) ds(rho); (u^2-4)/(4(u-v)) = ns^2(rho)/kappa.
      EXPECT_NEAR(d.Lambda_sq, 2 / kappa * j.cn * j.dn / (j.sn * j.sn), 1e-9 * d.Lambda_sq);
      EXPECT_NEAR((d.u * d.u - 4) / (4 * (d.u - d.v)), 1 / (kappa * j.sn * j.sn), 1e-9 * d.u);
    }
  }
}

TEST(DerivedParams, BoundaryValues) {
  // At m = 0, alpha = 1/(kappa sn^2(K/2)) and sn^2(K/2) = 1/(1 + kappa').
  const double kappa = 0.5, kp = std::sqrt(0.75);
  EXPECT_NEAR(derived_params(0, kappa).alpha, (1 + kp) / kappa, 1e-12);
  const auto j = oracle::jacobi_ode(oracle::complete_K(kappa) / 4, kappa);
  EXPECT_NEAR(derived_params(1, kappa).alpha, 1 / (kappa * j.sn * j.sn), 1e-9);
  EXPECT_THROW(derived_params(1, 0.0), DomainError);
}

TEST(VerifyTriviality, MassRelationAndClosedForm) {
  for (auto [m, kappa] : {std::pair{1.0, 0.5}, {0.5, 0.3}}) {
    const Charge2Verification v = verify_triviality(m, kappa);
    const Charge2Derived d = derived_params(m, kappa);
    EXPECT_LT(std::abs(v.mass_residual), 1e-10);
    EXPECT_NEAR(v.I1, std::sqrt(kappa / d.alpha) * oracle::complete_K(kappa), 1e-10);
  }
}

TEST(VerifyTriviality, GridResidualsAndCycleIntegers) {
  for (double m : mass_grid()) {
    for (double kappa : kappa_grid()) {
      const Charge2Derived d = derived_params(m, kappa);
      // F(arcsin(1/sqrt(alpha kappa)), kappa) = K(kappa)/(2(m+1)) with an
      // independent incomplete integral.
      const double phi = std::asin(1 / std::sqrt(d.alpha * kappa));
      const double F = oracle::integrate(
          [&](double t) { return 1 / std::sqrt(1 - kappa * kappa * std::sin(t) * std::sin(t)); }, 0, phi);
      EXPECT_NEAR(F, oracle::complete_K(kappa) / (2 * (m + 1)), 1e-10);
      const Charge2Verification v = verify_triviality(m, kappa);
      EXPECT_LT(std::abs(v.mass_residual), 1e-10) << m << " " << kappa;
      EXPECT_EQ(v.ell1, 0);
      EXPECT_EQ(v.ell2, -1);
      EXPECT_LT(v.ell_residual, 1e-6);
    }
  }
}

TEST(Limits, ClosedForms) {
  const BidegreeCurve sep = limit_separation();
  // (w^2 - 1)(z^2 - 1)
  EXPECT_EQ(sep(2, 2), 1.0);
  EXPECT_EQ(sep(2, 0), -1.0);
  EXPECT_EQ(sep(0, 2), -1.0);
  EXPECT_EQ(sep(0, 0), 1.0);
  for (double kappa : {0.2, 0.7}) {
    EXPECT_EQ(limit_nullaron(kappa).entrywise_distance(curve_from_mass(0, kappa)), 0.0);
  }
}

TEST(Limits, AxialFactorization) {
  for (double m : {0.0, 0.7, 1.0, 5.0}) {
    const double t = pi / (2 * (m + 1));
    const std::complex<double> a = std::polar(1.0, t), b = std::polar(1.0, -t);
    // (w - a z)(w - b z) = w^2 - (a+b) wz + ab z^2
    BidegreeCurve f(2);
    f(2, 0) = 1.0;
    f(1, 1) = -(a + b);
    f(0, 2) = a * b;
    EXPECT_LT(limit_axial(m).entrywise_distance(f), 1e-12);
  }
}

TEST(EuclidLimit, BothParametrisationsAgree) {
  for (double kappa : {0.1, 0.3, 0.5, 0.9}) {
    const EuclidCharge2 e = euclid_limit_charge2(kappa);
    EXPECT_LT(e.max_deviation, 1e-12) << kappa;
    const double K = oracle::complete_K(kappa);
    EXPECT_NEAR(e.limit_form[4], -K * K * kappa, 1e-12);
    EXPECT_NEAR(e.k, 2 * std::sqrt(kappa) / (1 + kappa), 1e-15);
    // Roots of the standard quartic are the branch points.
    std::vector<std::complex<double>> q(e.standard_form.begin(), e.standard_form.end());
    auto roots = polynomial_roots(q);
    for (double b : e.branch_points) {
      double best = 1;
      for (auto r : roots) best = std::min(best, std::abs(r - b));
      EXPECT_LT(best, 1e-10);
    }
  }
}

TEST(RationalMap, DegreeTwoNullaron) {
  for (double kappa : {0.1, 0.5, 0.8}) {
    const BidegreeCurve n = nullaron_from_rational_map({std::sqrt(1 - kappa * kappa)}, {-kappa, 0.0, 1.0});
    EXPECT_LT(n.projective_distance(limit_nullaron(kappa)), 1e-15);
    EXPECT_LT(n.reality_defect(), 1e-15);
  }
  EXPECT_THROW(nullaron_from_rational_map({-1.0, 1.0}, {-1.0, 0.0, 1.0}), DomainError);
}
