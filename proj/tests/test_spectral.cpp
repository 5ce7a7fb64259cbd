#include <carleman/errors.hpp>
#include <carleman/field_io.hpp>
#include <carleman/grid.hpp>
#include <carleman/knapp.hpp>
#include <carleman/normest.hpp>
#include <carleman/rng.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

using namespace carleman;

namespace {

constexpr double kPi = 3.141592653589793;

double max_rel_diff(const GridField& a, const GridField& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num = std::max(num, std::abs(a[i] - b[i]));
    den = std::max(den, std::abs(b[i]));
  }
  return num / den;
}

SymbolSpec constant_one(int d) {
  SymbolSpec s;
  s.family = SymbolFamily::Constant;
  s.d = d;
  return s;
}

// x -> conj(h(-x)) on an unmodulated lattice.
GridField conjugate_reflect(const GridField& h) {
  GridField g(h.axes(), h.domain());
  const int d = h.dim();
  std::vector<int> idx(d);
  for (std::size_t i = 0; i < h.size(); ++i) {
    h.multi_index(i, idx);
    std::size_t flat = 0;
    for (int a = 0; a < d; ++a) {
      const int n = h.axes()[a].n;
      flat = flat * n + static_cast<std::size_t>((n - idx[a]) % n);
    }
    g[flat] = std::conj(h[i]);
  }
  return g;
}

}  // namespace

TEST(Grid, RoundTrip) {
  const auto f = random_field({{32, 5.0, 0.0}, {16, 3.0, 1.5}, {8, 2.0, -0.7}}, 11, 0);
  EXPECT_LT(max_rel_diff(f.to_frequency().to_space(), f), 1e-12);
}

TEST(Grid, ConstantMultiplierIsIdentity) {
  const auto f = random_field({{16, 4.0, 0.0}, {16, 4.0, 0.0}, {16, 4.0, 0.0}}, 3, 1);
  const auto g = apply_multiplier(f, constant_one(3));
  EXPECT_LT(max_rel_diff(g, f), 1e-13);
}

TEST(Grid, MTildeWithoutTimeSupportGivesZero) {
  // Time frequencies 2pi m / 100 stay below 1/2, where psi vanishes.
  auto spec = make_mtilde(3, 1, 1.0 / 64);
  const auto f = random_field({{16, 6.0, 0.0}, {16, 6.0, 0.0}, {8, 100.0, 0.0}}, 4, 2);
  const auto g = apply_multiplier(f, spec);
  EXPECT_EQ(lp_norm(g, 2.0), 0.0);
}

TEST(Grid, ParsevalBoundAndSingleModeEquality) {
  const std::vector<GridAxis> axes{{32, 2 * kPi, 0.0}, {32, 2 * kPi, 0.0}};
  auto spec = make_full(2, 1);
  const auto table = tabulate_symbol(offset_for_full_symbol(axes), spec);
  const auto f = random_field(offset_for_full_symbol(axes), 5, 0);
  double mmax = 0.0;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (std::abs(table[i]) > mmax) mmax = std::abs(table[i]), arg = i;
  const auto g = apply_multiplier(f, table);
  EXPECT_LE(lp_norm(g, 2), mmax * lp_norm(f, 2) * (1 + 1e-12));
  GridField mode(offset_for_full_symbol(axes), Domain::Frequency);
  mode[arg] = 1.0;
  const auto gm = apply_multiplier(mode.to_space(), table);
  EXPECT_NEAR(lp_norm(gm, 2) / lp_norm(mode.to_space(), 2), mmax, 1e-10 * mmax);
}

TEST(Grid, OffsetAvoidsSingularSphere) {
  const std::vector<GridAxis> axes{{64, 2 * kPi, 0.0}, {64, 2 * kPi, 0.0}, {64, 2 * kPi, 0.0}};
  EXPECT_THROW(tabulate_symbol(axes, make_full(3, 1)), SingularFrequency);
  EXPECT_NO_THROW(tabulate_symbol(offset_for_full_symbol(axes), make_full(3, 1)));
}

TEST(Grid, FullTimesInverseIsIdentity) {
  const auto axes = offset_for_full_symbol({{16, 9.0, 0.0}, {16, 9.0, 0.0}, {16, 9.0, 0.0}});
  const auto f = random_field(axes, 8, 3);
  for (int k = 1; k <= 2; ++k) {
    SymbolSpec inv = make_full(3, k);
    inv.family = SymbolFamily::FullInverse;
    const auto g = apply_multiplier(apply_multiplier(f, make_full(3, k)), inv);
    EXPECT_LT(max_rel_diff(g, f), 1e-8) << k;
  }
}

TEST(Grid, ConjugateSymbolDuality) {
  const auto axes = offset_for_full_symbol({{16, 7.0, 0.0}, {16, 7.0, 0.0}, {16, 7.0, 0.0}});
  const auto spec = make_mtilde(3, 2, 1.0 / 32);
  for (std::uint64_t s = 0; s < 3; ++s) {
    const auto h = random_field(axes, 21, s);
    for (double q : {2.0, 4.0, 6.0}) {
      const double a = lp_norm(apply_multiplier(h, spec), q);
      const double b = lp_norm(apply_multiplier(conjugate_reflect(h), spec.conjugated()), q);
      EXPECT_NEAR(a, b, 1e-10 * a);
    }
  }
}

TEST(Norms, IndicatorAndScaling) {
  GridField f = GridField::isotropic(2, 16, 4.0);
  for (int i = 0; i < 7; ++i) f[i * 3] = 1.0;
  for (double p : {1.0, 2.0, 3.5}) EXPECT_NEAR(lp_norm(f, p), std::pow(7 * f.cell_volume(), 1.0 / p), 1e-14);
  EXPECT_EQ(lp_norm(f, INFINITY), 1.0);
  const auto g = random_field(f.axes(), 1, 1);
  GridField h = g;
  for (auto& v : h.samples()) v *= cplx(-2.5, 1.0);
  EXPECT_NEAR(lp_norm(h, 3.0), std::abs(cplx(-2.5, 1.0)) * lp_norm(g, 3.0), 1e-12 * lp_norm(h, 3.0));
}

TEST(Norms, Holder) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto f = random_field({{16, 3.0, 0.0}, {16, 5.0, 0.0}}, 2, s);
    EXPECT_LE(lp_norm(f, 1), lp_norm(f, 2) * std::sqrt(f.total_volume()) * (1 + 1e-12));
  }
}

TEST(Lorentz, SpikeAndTwoLevel) {
  GridField f = GridField::isotropic(2, 8, 2.0);
  const double cell = f.cell_volume();
  f[5] = 3.0;
  for (double p : {1.5, 2.0, 4.0}) {
    EXPECT_NEAR(lorentz_norm(f, p, LorentzFlavor::P1), 3.0 * std::pow(cell, 1 / p), 1e-14);
    EXPECT_NEAR(lorentz_norm(f, p, LorentzFlavor::PInf), 3.0 * std::pow(cell, 1 / p), 1e-14);
  }
  // Levels 2 on measure a and 1 on measure b.
  const double a = 3 * 0.25, b = 5 * 0.25, p = 2.0;
  std::vector<double> mod{2, 2, 2, 1, 1, 1, 1, 1};
  EXPECT_NEAR(lorentz_norm(mod, 0.25, p, LorentzFlavor::P1), (2 - 1) * std::pow(a, 1 / p) + 1 * std::pow(a + b, 1 / p), 1e-14);
  EXPECT_NEAR(lorentz_norm(mod, 0.25, p, LorentzFlavor::PInf), std::max(2 * std::pow(a, 1 / p), std::pow(a + b, 1 / p)),
              1e-14);
}

TEST(Lorentz, WeakBelowStrong) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto f = random_field({{32, 3.0, 0.0}, {32, 3.0, 0.0}}, 9, s);
    for (double p : {1.5, 2.0, 3.0})
      EXPECT_LE(lorentz_norm(f, p, LorentzFlavor::PInf), lp_norm(f, p) * (1 + 1e-12));
  }
}

TEST(Knapp, NormScaling) {
  const double delta0 = 1.0 / 32;
  std::vector<std::pair<double, double>> pairs;
  for (int e = 3; e <= 6; ++e) {
    const double eps = std::ldexp(1.0, -e);
    pairs.emplace_back(eps, lp_norm(make_knapp(3, 1, eps, delta0), 2.0));
  }
  const auto fit = fit_loglog(pairs);
  EXPECT_NEAR(fit.slope, 3.0 / 2 - 3.0 / 4, 0.1);
}

TEST(Knapp, FrequencySupportInSlab) {
  const double eps = 1.0 / 16, delta0 = 1.0 / 32, wd = eps * delta0, sq = std::sqrt(wd);
  const auto fhat = make_knapp(3, 1, eps, delta0).to_frequency();
  double outside = 0.0, inside = 0.0;
  std::vector<double> xi(3);
  for (std::size_t i = 0; i < fhat.size(); ++i) {
    fhat.frequencies(i, xi);
    const bool slab = std::abs(xi[0]) <= 2 * sq && std::abs(xi[1] - 1) <= 2 * wd && xi[2] >= 0.5 && xi[2] <= 2;
    (slab ? inside : outside) = std::max(slab ? inside : outside, std::abs(fhat[i]));
  }
  EXPECT_GT(inside, 0.5);
  EXPECT_LT(outside, 1e-12 * inside);
}

TEST(Knapp, RejectsUnderResolution) {
  KnappGridParams coarse;
  coarse.cells_per_support = 4;
  EXPECT_THROW(make_knapp(3, 1, 1.0 / 16, 1.0 / 32, coarse), ResolutionError);
}

TEST(Knapp, DiagonalExponent) {
  const ExponentPoint P{Rational(2, 3), Rational(2, 3)};
  EXPECT_EQ(theoretical_exponent(ExponentKind::MeKnapp, 3, 2, P), -2.0);
}

// |Im m~(D) f| >= c (delta eps)^{d/2} delta eps^{-k} on the witness set, c stable across halvings.
TEST(Knapp, ImaginaryLowerBoundConstantStable) {
  const double delta0 = 1.0 / 32;
  std::vector<double> c;
  for (int e = 3; e <= 6; ++e) {
    const double eps = std::ldexp(1.0, -e);
    const auto f = make_knapp(3, 1, eps, delta0);
    auto spec = make_mtilde(3, 1, eps, 1.0 / 32);
    spec.require_dyadic = false;
    const auto g = apply_multiplier(f, spec.with_part(SymbolPart::Imag));
    double lo = INFINITY;
    std::vector<double> x(3);
    for (std::size_t i = 0; i < g.size(); ++i) {
      g.coordinates(i, x);
      if (in_knapp_set(x, eps)) lo = std::min(lo, std::abs(g.physical_value(i)));
    }
    const double wd = delta0 * eps;
    c.push_back(lo / (std::pow(wd, 1.5) * delta0 / eps));
  }
  const auto [mn, mx] = std::minmax_element(c.begin(), c.end());
  EXPECT_GT(*mn, 0.0);
  EXPECT_LT(*mx / *mn, 2.0);
}

TEST(FieldIo, RoundTripBitIdentical) {
  const auto f = random_field({{8, 3.0, 0.25}, {4, 2.0, -1.0}}, 13, 0);
  const auto path = (std::filesystem::temp_directory_path() / "carleman_field_test.bin").string();
  write_field(f, path, "test");
  const auto g = read_field(path);
  ASSERT_EQ(g.axes(), f.axes());
  ASSERT_EQ(g.domain(), f.domain());
  for (std::size_t i = 0; i < f.size(); ++i) ASSERT_EQ(g[i], f[i]);
  EXPECT_TRUE(std::filesystem::exists(path + ".json"));
  std::filesystem::remove(path);
  std::filesystem::remove(path + ".json");
}
