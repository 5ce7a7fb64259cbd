#include <carleman/cutoffs.hpp>
#include <carleman/errors.hpp>
#include <carleman/jet.hpp>
#include <carleman/rng.hpp>
#include <carleman/symbols.hpp>
#include <gtest/gtest.h>

#include <array>
#include <cmath>

using namespace carleman;

TEST(Cutoffs, SupportValues) {
  EXPECT_EQ(Cutoff::psi()(3.0), 0.0);
  EXPECT_EQ(Cutoff::psi()(0.4), 0.0);
  EXPECT_EQ(Cutoff::psi0()(0.0), 1.0);
  EXPECT_EQ(Cutoff::psi0()(0.9), 1.0);
  EXPECT_EQ(Cutoff::psi0()(2.1), 0.0);
  EXPECT_DOUBLE_EQ(Cutoff::psi()(-1.3), Cutoff::psi()(1.3));
}

TEST(Cutoffs, DyadicPartitionOfUnity) {
  for (double t : {1.37, 0.01, 42.0, -3.3, 1e-5}) {
    double s = 0.0;
    for (int j = -30; j <= 30; ++j) s += Cutoff::psi()(std::ldexp(t, -j));
    EXPECT_NEAR(s, 1.0, 1e-12) << t;
  }
}

TEST(Cutoffs, LowPassComplement) {
  for (double t : {0.3, 1.5, 1.9, 2.5, -1.7}) {
    double s = 0.0;
    for (int j = 1; j <= 40; ++j) s += Cutoff::psi()(std::ldexp(t, -j));
    EXPECT_NEAR(Cutoff::psi0()(t), 1.0 - s, 1e-12) << t;
  }
}

TEST(Cutoffs, DerivativesMatchFiniteDifferences) {
  const Cutoff c = Cutoff::psi0();
  for (double t : {1.2, 1.5, 1.8, -1.4}) {
    const Jet j = c.jet(t, 3);
    const double h = 1e-5;
    EXPECT_NEAR(j.derivative(1), (c(t + h) - c(t - h)) / (2 * h), 1e-6);
    EXPECT_NEAR(c.derivative(1)(t), j.derivative(1), 1e-12);
    EXPECT_NEAR(c.derivative(2)(t), j.derivative(2), 1e-10);
  }
}

TEST(Cutoffs, DerivativeOrderCap) { EXPECT_THROW(Cutoff::psi().derivative(kMaxCutoffDerivative + 1), DomainError); }

TEST(Cutoffs, DyadicTailClosedForm) {
  const double eps0 = 1.0 / 32;
  for (double tau : {0.001, 0.01, 0.02, 0.05, 0.07}) {
    double s = 0.0;
    for (int j = -5; j >= -60; --j) s += Cutoff::psi()(std::ldexp(tau, -j));
    EXPECT_NEAR(dyadic_tail(tau, eps0), s, 1e-12) << tau;
  }
}

TEST(Jet, CompositionAndDivision) {
  // exp(sin-free) check: f = exp(t^2) at t0 = 0.3, derivatives from the ODE f' = 2 t f.
  const Jet t = Jet::variable(4, 0.3);
  const Jet f = exp(t * t);
  const double v = std::exp(0.09);
  EXPECT_NEAR(f.derivative(1), 0.6 * v, 1e-13);
  EXPECT_NEAR(f.derivative(2), (2 + 4 * 0.09) * v, 1e-12);
  const Jet q = Jet::constant(4, 1.0) / (1.0 + t);
  EXPECT_NEAR(q.derivative(3), -6.0 / std::pow(1.3, 4), 1e-12);
  EXPECT_NEAR(sqrt(t + 1.0).derivative(2), -0.25 * std::pow(1.3, -1.5), 1e-13);
}

TEST(Symbols, FullExamples) {
  const std::array<double, 3> zero{0, 0, 0}, up{0, 0, 1};
  for (int k = 1; k <= 4; ++k) {
    const cplx v = eval_symbol(make_full(3, k), zero);
    EXPECT_NEAR(v.real(), k % 2 ? -1.0 : 1.0, 1e-15);
    EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  }
  const cplx w = eval_symbol(make_full(3, 1), up);
  EXPECT_NEAR(w.real(), 0.0, 1e-15);
  EXPECT_NEAR(w.imag(), -0.5, 1e-15);
  EXPECT_THROW(eval_symbol_radial(make_full(3, 1), 1.0, 0.0), SingularFrequency);
}

TEST(Symbols, MTildeVanishesOffPsiSupport) {
  const auto s = make_mtilde(3, 2, 1.0 / 64);
  EXPECT_EQ(eval_symbol_radial(s, 1.0, 0.3), cplx(0.0, 0.0));
  EXPECT_EQ(eval_symbol_radial(s, 1.0, 2.5), cplx(0.0, 0.0));
  EXPECT_EQ(eval_im_mtilde(3, 2, 1.0 / 64, 1.0 / 32, 1.0, 2.5), 0.0);
}

TEST(Symbols, ImaginaryPartSingleTermForKOne) {
  const double eps = 1.0 / 64, eps0 = 1.0 / 32;
  for (double eta_sq : {0.98, 1.0, 1.01})
    for (double tau : {0.7, 1.0, -1.4}) {
      const double a = eta_sq - 1 + eps * eps * tau * tau, b = 2 * eps * tau;
      const double c = Cutoff::psi0()((1 - eta_sq) / eps0) * Cutoff::psi()(tau);
      EXPECT_NEAR(eval_im_mtilde(3, 1, eps, eps0, eta_sq, tau), -b * c / (a * a + b * b), 1e-12);
    }
}

TEST(Symbols, ImaginaryExpansionMatchesDirect) {
  CounterRng rng(3, 2);
  for (int i = 0; i < 2000; ++i) {
    const int k = 1 + static_cast<int>(rng.uniform() * 4);
    const double eps = std::ldexp(1.0, -5 - static_cast<int>(rng.uniform() * 6));
    const double eta_sq = 1.0 + (rng.uniform() - 0.5) * 0.1;
    const double tau = 0.5 + 1.5 * rng.uniform();
    const double direct = eval_symbol_radial(make_mtilde(3, k, eps), eta_sq, tau).imag();
    const double literal = eval_im_mtilde(3, k, eps, 1.0 / 32, eta_sq, tau);
    EXPECT_LE(std::abs(direct - literal), 1e-10 * std::max(std::abs(direct), 1e-300)) << i;
  }
}

TEST(Symbols, DecompositionReconstructsFull) {
  CounterRng rng(5, 3);
  for (int i = 0; i < 10000; ++i) {
    const int k = 1 + static_cast<int>(rng.uniform() * 3);
    const double eta_sq = 1.0 + (rng.uniform() - 0.5) * 0.2;
    const double tau = (rng.uniform() < 0.5 ? -1 : 1) * std::exp2(-12.0 + 14.0 * rng.uniform());
    auto local = make_full(3, k), global = make_full(3, k);
    local.family = SymbolFamily::MLocal;
    global.family = SymbolFamily::MGlobal;
    const cplx f = eval_symbol_radial(make_full(3, k), eta_sq, tau);
    const cplx s = eval_symbol_radial(local, eta_sq, tau) + eval_symbol_radial(global, eta_sq, tau);
    ASSERT_LE(std::abs(s - f), 1e-10 * std::abs(f)) << i;
  }
}

TEST(Symbols, RescalingIdentity) {
  for (double eps : {1.0 / 32, 1.0 / 256})
    for (double eta_sq : {0.99, 1.0, 1.02})
      for (double tau : {0.6, 1.1, -1.8}) {
        const cplx a = eval_symbol_radial(make_mtilde(3, 2, eps), eta_sq, tau);
        const cplx b = eval_symbol_radial(make_meps(3, 2, eps), eta_sq, eps * tau);
        EXPECT_LE(std::abs(a - b), 1e-12 * std::max(1.0, std::abs(a)));
      }
}

TEST(Symbols, MTildeEqualsGeneralFormWithPsi0) {
  const double eps = 1.0 / 128;
  const auto gen = make_mtilde_gen(3, 3, eps, Cutoff::psi0(), 1.0 / 32);
  for (double eta_sq : {0.97, 0.99, 1.0, 1.03})
    for (double tau : {0.55, 1.0, 1.9})
      EXPECT_EQ(eval_symbol_radial(make_mtilde(3, 3, eps), eta_sq, tau), eval_symbol_radial(gen, eta_sq, tau));
}

TEST(Symbols, RingSupportInShells) {
  const double eps = 1.0 / 64;
  for (int j = 0; j <= 3; ++j) {
    const auto ring = make_ring(3, 1, eps, j);
    const double delta = std::ldexp(eps, j);
    for (int i = 0; i <= 2000; ++i) {
      const double eta_sq = 1.0 - 3 * delta + 6 * delta * i / 2000.0;
      const double u = std::abs(1 - eta_sq);
      const cplx v = eval_symbol_radial(ring, eta_sq, 1.0);
      if (u < delta / 2 || u > 2 * delta) EXPECT_EQ(v, cplx(0.0, 0.0)) << j << " " << eta_sq;
    }
  }
  EXPECT_THROW(make_ring(3, 1, eps, 5).validate(), DomainError);
}

TEST(Symbols, ConjugationSymmetry) {
  for (int k = 1; k <= 3; ++k)
    for (double eta_sq : {0.3, 0.99, 1.5})
      for (double tau : {0.01, 0.4, 2.0}) {
        const auto s = make_full(3, k);
        EXPECT_LE(std::abs(eval_symbol_radial(s, eta_sq, -tau) - std::conj(eval_symbol_radial(s, eta_sq, tau))),
                  1e-14 * std::abs(eval_symbol_radial(s, eta_sq, tau)));
      }
}

TEST(Symbols, ValidationOfDyadicParameters) {
  EXPECT_THROW(make_mtilde(3, 1, 0.03).validate(), DomainError);
  EXPECT_THROW(make_mtilde(3, 1, 1.0 / 16).validate(), DomainError);
  auto relaxed = make_mtilde(3, 1, 1.0 / 8);
  relaxed.require_dyadic = false;
  EXPECT_NO_THROW(relaxed.validate());
}

TEST(Symbols, PhiProfile) {
  const double eps = 1.0 / 64;
  EXPECT_EQ(eval_phi_eps_ell(eps, 0, 1.0, 3.0), cplx(0.0, 0.0));
  EXPECT_NEAR(std::abs(eval_phi_eps_ell(eps, 0, 1.0, 1.0)), 1.0 / std::sqrt(std::pow(eps, 4) + 4 * eps * eps), 1e-10);
}

// |d^r/dtau^r phi| <= C (2^j eps)^{-1} on the ring I_j, with C stable across eps.
TEST(Symbols, PhiDerivativeBoundsStable) {
  std::vector<double> constants;
  for (int e = 5; e <= 9; ++e) {
    const double eps = std::ldexp(1.0, -e);
    double worst = 0.0;
    for (int j = 0; (1 << j) * eps <= 0.25; ++j) {
      const double scale = std::ldexp(eps, j);
      for (int a = 0; a <= 20; ++a) {
        const double u = scale * (0.5 + 1.5 * a / 20.0);
        const double rho = std::sqrt(1 + u);
        for (int b = 0; b <= 40; ++b) {
          const double tau = 0.5 + 1.5 * b / 40.0, h = 1e-4;
          const cplx f0 = eval_phi_eps_ell(eps, 0, rho, tau);
          const cplx fp = eval_phi_eps_ell(eps, 0, rho, tau + h), fm = eval_phi_eps_ell(eps, 0, rho, tau - h);
          const double m = std::max({std::abs(f0), std::abs(fp - fm) / (2 * h), std::abs(fp - 2.0 * f0 + fm) / (h * h)});
          worst = std::max(worst, m * scale);
        }
      }
    }
    constants.push_back(worst);
  }
  const auto [lo, hi] = std::minmax_element(constants.begin(), constants.end());
  EXPECT_LT(*hi / *lo, 2.0);
}
