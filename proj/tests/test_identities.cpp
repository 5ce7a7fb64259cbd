#include <carleman/bessel.hpp>
#include <carleman/errors.hpp>
#include <carleman/identities.hpp>
#include <carleman/kelvin.hpp>
#include <carleman/rng.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace carleman;

namespace {

TestFunction gaussian(int n) { return TestFunction::poly_gauss(n, {{1.0, std::vector<int>(n, 0)}}, 1.0); }
TestFunction constant(int n) { return TestFunction::poly_gauss(n, {{1.0, std::vector<int>(n, 0)}}, 0.0); }

}  // namespace

TEST(LOperator, Examples) {
  const std::vector<double> th{0.3, -0.7, 1.1};
  const double r2 = 0.09 + 0.49 + 1.21;
  EXPECT_NEAR(L_apply(TestFunction::radial_power(3, -1.0), 1, th), 0.0, 1e-14);
  EXPECT_NEAR(L_apply(TestFunction::radial_power(5, -3.0), 2, std::vector<double>{0.2, 0.1, 0.4, 0.9, 0.3}), 0.0, 1e-12);
  EXPECT_NEAR(L_apply(constant(3), 1, th), 1 / (2 * r2), 1e-14);
  EXPECT_THROW(L_apply(constant(3), 1, std::vector<double>{0, 0, 0}), DomainError);
}

TEST(LOperator, GaussianHandDerivative) {
  CounterRng rng(1, 1);
  for (int n : {2, 3, 5})
    for (int i = 0; i < 10; ++i) {
      std::vector<double> th(n);
      double r2 = 0.0;
      for (auto& v : th) r2 += (v = 2 * rng.uniform() - 1) * v;
      const double want = (n - 2 - 2 * r2) * std::exp(-r2) / (2 * r2);
      EXPECT_NEAR(L_apply(gaussian(n), 1, th), want, 1e-13 * std::max(1.0, std::abs(want)));
    }
}

TEST(Pullback, HalfSurfaceArea) {
  for (int n : {2, 3, 4}) EXPECT_NEAR(pair_pullback(1, 1.0, constant(n), n), sphere_area(n) / 2, 1e-10) << n;
}

TEST(SphereRuleSize, RejectsHugeTensorRules) { EXPECT_THROW(SphereRule(6, 32, 64), DomainError); }

TEST(Pullback, HarmonicPowerAnnihilated) {
  EXPECT_NEAR(pair_pullback(2, 1.0, TestFunction::radial_power(3, -1.0), 3), 0.0, 1e-8);
}

TEST(Pullback, SamplingOracle) {
  CounterRng rng(4, 4);
  for (int i = 0; i < 3; ++i) {
    const auto phi = TestFunction::random_poly_gauss(3, rng);
    const double a = pair_pullback(1, 1.0, phi, 3), b = pair_pullback_sampling(1.0, phi);
    EXPECT_LE(std::abs(a - b), 1e-6 * std::abs(b));
  }
}

TEST(Pullback, HalfSphereIntegral) {
  CounterRng rng(8, 1);
  const SphereRule rule(3, 40, 80);
  for (int i = 0; i < 20; ++i) {
    const auto phi = TestFunction::random_poly_gauss(3, rng);
    const double direct = 0.5 * rule.integrate([&](std::span<const double> w) { return phi(w); });
    EXPECT_LE(std::abs(pair_pullback(1, 1.0, phi, 3) - direct), 1e-8 * std::abs(direct));
  }
}

TEST(DistIdentity, Examples) {
  const auto phi = gaussian(3);
  const auto r1 = verify_dist_identity(1, 1.0, phi, 3);
  EXPECT_EQ(r1.lhs, r1.rhs);
  CounterRng rng(2, 0);
  EXPECT_LE(verify_dist_identity(2, 1.0, TestFunction::random_poly_gauss(3, rng), 3).rel_err, 1e-6);
  EXPECT_LE(verify_dist_identity(3, 1.3, TestFunction::random_poly_gauss(4, rng), 4).rel_err, 1e-5);
}

TEST(DistIdentity, Grid) {
  CounterRng rng(6, 6);
  for (int k : {2, 3})
    for (int n : {2, 3, 4})
      for (double rho : {0.8, 1.0, 1.3}) {
        const auto r = verify_dist_identity(k, rho, TestFunction::random_poly_gauss(n, rng), n);
        EXPECT_LE(r.rel_err, 1e-5) << k << " " << n << " " << rho;
        EXPECT_NEAR(r.abs_err, std::abs(r.lhs - r.rhs), 1e-15 * std::abs(r.lhs));
      }
}

TEST(Counter, KOneIsTautology) {
  CounterSetup s;
  s.k = 1;
  CounterRng rng(3, 3);
  const auto h = TestFunction::random_poly_gauss(2, rng);
  EXPECT_EQ(verify_counter_identities(CounterKind::Induc, s, h).rel_err, 0.0);
  EXPECT_EQ(verify_counter_identities(CounterKind::Rev, s, h).rel_err, 0.0);
}

TEST(Counter, KTwoDimensionThree) {
  CounterSetup s;
  s.d = 3;
  s.k = 2;
  s.eps = 1.0 / 32;
  s.tau = 1.0;
  CounterRng rng(5, 0);
  const auto r = verify_counter_suite(s, TestFunction::random_poly_gauss(2, rng));
  EXPECT_LE(r.induc.rel_err, 1e-6);
  EXPECT_LE(r.rev.rel_err, 1e-6);
  EXPECT_LE(r.round_trip.rel_err, 1e-5);
}

TEST(Kelvin, Involution) {
  const auto u = RadialProfile::gaussian_annulus(0.1);
  for (double s : {0.5, 1.0, 1.25})
    for (double r : {0.6, 0.9, 1.0, 1.2, 1.6}) {
      auto inner = [&](std::span<const double> x) {
        const double rr = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        return kelvin(u, s, rr);
      };
      const std::vector<double> x{r, 0.0, 0.0};
      EXPECT_NEAR(kelvin(inner, 3, s, x), u.value(r), 1e-13);
    }
}

TEST(Kelvin, LaplacianAtBaseResolution) {
  const auto r = verify_kelvin(RadialProfile::gaussian_annulus(0.1), 1.0, {128, 4.0});
  EXPECT_LE(r.rel_err, 1e-3);
}

TEST(Kelvin, RejectsBadOrderAndSupport) {
  const auto u = RadialProfile::gaussian_annulus(0.1);
  EXPECT_THROW(verify_kelvin(u, 1.5, {64, 4.0}), DomainError);
  EXPECT_THROW(verify_kelvin(u, 1.0, {64, 2.0}), DomainError);
}
