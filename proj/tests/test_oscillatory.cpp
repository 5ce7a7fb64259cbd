#include <boost/math/special_functions/bessel.hpp>
#include <carleman/bessel.hpp>
#include <carleman/errors.hpp>
#include <carleman/identities.hpp>
#include <carleman/lower_bound.hpp>
#include <carleman/quadrature.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace carleman;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Bessel, ClosedFormsAndOrigin) {
  for (double r : {1.0, 10.0, 100.0}) EXPECT_NEAR(bessel_j(0.5, r), std::sqrt(2 / (kPi * r)) * std::sin(r), 1e-14);
  EXPECT_EQ(bessel_j(0.0, 0.0), 1.0);
  EXPECT_EQ(bessel_j(2.0, 0.0), 0.0);
  EXPECT_THROW(bessel_j(0.3, 1.0), UnsupportedOrder);
}

TEST(Bessel, AgreesWithBoostOverSupportedRange) {
  double worst = 0.0;
  for (int twice = 0; twice <= 30; ++twice) {
    const double nu = twice / 2.0;
    for (double r = 0.01; r <= 1e4; r *= 1.07) {
      const double ref = boost::math::cyl_bessel_j(nu, r);
      worst = std::max(worst, std::abs(bessel_j(nu, r) - ref));
    }
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(Bessel, SwitchoverRegionAgreesWithClosedForms) {
  for (double r = 7.0; r <= 30.0; r += 0.173) {
    const double s = std::sin(r), c = std::cos(r);
    const double j12 = std::sqrt(2 / (kPi * r)) * s;
    const double j32 = std::sqrt(2 / (kPi * r)) * (s / r - c);
    const double j52 = std::sqrt(2 / (kPi * r)) * ((3 / (r * r) - 1) * s - 3 * c / r);
    EXPECT_NEAR(bessel_j(0.5, r), j12, 1e-13);
    EXPECT_NEAR(bessel_j(1.5, r), j32, 1e-13);
    EXPECT_NEAR(bessel_j(2.5, r), j52, 1e-13);
  }
}

TEST(Bessel, AsymptoticRemainderConstantStable) {
  // J_{1/2} equals its leading term exactly, so half-integer orders start at 3/2.
  for (double nu : {0.0, 1.0, 1.5, 2.5}) {
    std::vector<double> c;
    for (double lo : {10.0, 100.0, 1000.0}) {
      double m = 0.0;
      for (double r = lo; r < 10 * lo; r += lo / 200) {
        const double a = std::sqrt(2 / (kPi * r)) * std::cos(r - nu * kPi / 2 - kPi / 4);
        m = std::max(m, std::abs(bessel_j(nu, r) - a) * std::pow(r, 1.5));
      }
      c.push_back(m);
    }
    // The remainder bound is an upper bound; its constant must not grow with r.
    EXPECT_LT(c[2], 1.5 * c[0]) << nu;
    EXPECT_LT(c[1], 1.5 * c[0]) << nu;
  }
}

TEST(SphereHat, ClassicalCases) {
  for (double r : {0.3, 2.0, 17.0}) EXPECT_NEAR(sphere_hat(2, r), 2 * kPi * bessel_j(0, r), 1e-12);
  for (int n = 2; n <= 8; ++n) EXPECT_NEAR(sphere_hat(n, 0.0), sphere_area(n), 1e-12);
  EXPECT_NEAR(sphere_area(3), 4 * kPi, 1e-14);
  // Brute-force quadrature of the Fourier integral over S^2.
  const SphereRule rule(3, 48, 96);
  const double r = 2.0;
  const double direct = rule.integrate([&](std::span<const double> w) { return std::cos(r * w[2]); });
  EXPECT_NEAR(sphere_hat(3, r), direct, 1e-8 * std::abs(direct));
  EXPECT_NEAR(sphere_hat(3, r), 4 * kPi * std::sin(r) / r, 1e-12);
}

TEST(Quadrature, SmoothAndOscillatory) {
  const double v = integrate_panels([](double x) { return std::exp(-x * x); }, panel_edges(-8, 8, {}), 1e-14, 1e-14);
  EXPECT_NEAR(v, std::sqrt(kPi), 1e-13);
  const double w = 200.0;
  QuadResult info;
  const double o = integrate_panels([&](double x) { return std::cos(w * x); }, panel_edges(0, 1, {}), 1e-13, 1e-13, &info);
  EXPECT_NEAR(o, std::sin(w) / w, 1e-12);
  EXPECT_GT(info.panels, 1u);
}

TEST(Quadrature, NearResonanceLayer) {
  // int_0^2 eps / ((x-1)^2 + eps^2) dx = 2 atan(1/eps).
  for (double eps : {1e-2, 1e-4, 1e-6}) {
    const double v =
        integrate_panels([&](double x) { return eps / ((x - 1) * (x - 1) + eps * eps); }, panel_edges(0, 2, {1.0}), 1e-11);
    EXPECT_NEAR(v, 2 * std::atan(1 / eps), 1e-9) << eps;
  }
}

TEST(Quadrature, BudgetExhaustionThrows) {
  EXPECT_THROW(integrate_panels([](double x) { return 1 / std::sqrt(std::abs(x - 0.3)); }, panel_edges(0, 1, {}), 1e-15,
                                0.0, nullptr, 50),
               QuadratureError);
}

TEST(Quadrature, GaussLegendreRule) {
  std::vector<double> x, w;
  gauss_legendre_rule(20, x, w);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], 38);
  EXPECT_NEAR(s, 2.0 / 39, 1e-14);
}

TEST(LowerBound, LambdaAndMuInvariants) {
  LowerBoundParams p;
  p.resolve();
  EXPECT_GE(b_integral(p.lambda / 4), 16 * (kPi - b_integral(p.lambda / 4)) * (1 - 1e-12));
  // Bisection returns the smallest admissible value.
  EXPECT_LT(b_integral(0.99 * p.lambda / 4), 16 * (kPi - b_integral(0.99 * p.lambda / 4)));
  EXPECT_LE(p.lambda * p.mu, std::ldexp(1.0, -7) * (1 + 1e-12));
  EXPECT_NEAR(b_integral(1.0), kPi / 2, 1e-14);
}

TEST(LowerBound, WitnessProfileProperties) {
  for (auto [d, k] : std::vector<std::pair<int, int>>{{5, 2}, {7, 2}, {7, 3}, {3, 1}}) {
    Phi5Spec s{d, k, 0.125};
    const double e = (d - 2.0 * k) / 2;
    for (double u = 0.0; u <= 0.3; u += 0.005) {
      const double plus = std::pow(1 + u, e) * s.phi(1 + u), minus = std::pow(1 - u, e) * s.phi(1 - u);
      EXPECT_NEAR(plus, minus, 1e-14);
      EXPECT_LE(plus, 1.0 + 1e-15);
      if (u <= s.delta0) EXPECT_NEAR(plus, 1.0, 1e-14);
      if (u > 2 * s.delta0) EXPECT_EQ(plus, 0.0);
    }
  }
}

TEST(LowerBound, IntegralsAtZeroFrequency) {
  Phi5Spec s{5, 2, 0.125};
  for (double tau : {0.5, 1.0, 1.7}) {
    EXPECT_NEAR(I_integral(IWhich::I3, tau, 0.0, 1.0 / 64, s), 0.0, 1e-12);
    EXPECT_NEAR(I_integral(IWhich::I1, tau, 0.0, 1.0 / 64, s), I_integral(IWhich::Tilde1, tau, 0.0, 1.0 / 64, s), 1e-9);
  }
}

TEST(LowerBound, TildeTwoOverLogBounded) {
  Phi5Spec s{5, 2, 0.125};
  for (int e = 4; e <= 12; ++e) {
    const double eps = std::ldexp(1.0, -e);
    const double ratio = I_integral(IWhich::Tilde2, 1.0, 0.0, eps, s) / std::log(1 / eps);
    EXPECT_LT(std::abs(ratio), 0.1) << e;
  }
}

TEST(LowerBound, KOneDecompositionIsDirect) {
  Phi5Spec s{3, 1, 0.125};
  for (double y : {0.0, 5.0, 40.0}) {
    const auto J = J_decomposition(3, 1, 1.0 / 32, s, y, 0.3);
    const cplx direct = mtilde_radial(3, 1, 1.0 / 32, s, y, 0.3);
    EXPECT_LE(std::abs(J.total() - direct), 1e-8 * std::abs(direct)) << y;
  }
}

TEST(LowerBound, RewriteAgreesWithDirect) {
  for (auto [d, k] : std::vector<std::pair<int, int>>{{5, 2}, {7, 2}}) {
    Phi5Spec s{d, k, 0.125};
    for (double y : {3.0, 20.0, 47.0}) {
      const double eps = 1.0 / 32, t = 0.4;
      const auto J = J_decomposition(d, k, eps, s, y, t);
      const cplx direct = mtilde_radial(d, k, eps, s, y, t);
      EXPECT_LE(std::abs(J.total() - direct), 1e-6 * std::abs(direct)) << d << "," << k << " y=" << y;
      if (y >= 1 / (1 - 2 * s.delta0)) {
        EXPECT_LE(std::abs(J.J_top_from_pieces - J.J.back()), 1e-6 * std::abs(J.J.back()));
      }
    }
  }
}

TEST(FrakS, WindowMembership) {
  LowerBoundParams p;
  p.eps = 1.0 / 64;
  p.resolve();
  const auto S = frak_S_sample(p);
  ASSERT_FALSE(S.values.empty());
  const double al = alpha_dk(p.d, p.k);
  for (double v : S.values) {
    EXPECT_GE(v, p.c1 / p.eps);
    EXPECT_LE(v, p.c2 / p.eps);
    const double phase = std::remainder(v - al, 2 * kPi);
    EXPECT_LE(std::abs(phase), p.c0 + 1e-12);
  }
  const double windows = (p.c2 - p.c1) / (2 * kPi * p.eps);
  EXPECT_NEAR(static_cast<double>(S.values.size()), windows * p.samples_per_window, 2.0 * p.samples_per_window);
}

TEST(FrakS, FullCircleAndEmptyReason) {
  LowerBoundParams p;
  p.eps = 1.0 / 64;
  p.c0 = kPi;
  p.samples_per_window = 9;
  const auto S = frak_S_sample(p);
  for (std::size_t i = 1; i < S.values.size(); ++i) EXPECT_LE(S.values[i] - S.values[i - 1], 2 * kPi / 8 + 1e-9);
  LowerBoundParams bad = p;
  bad.c1 = bad.c2;
  EXPECT_FALSE(frak_S_sample(bad).empty_reason.empty());
}
