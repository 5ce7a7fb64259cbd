#include "carlab/acceptance.hpp"

#include <carleman/errors.hpp>
#include <carleman/experiments.hpp>
#include <carleman/identities.hpp>
#include <carleman/kelvin.hpp>
#include <carleman/regions.hpp>
#include <carleman/rng.hpp>
#include <carleman/symbols.hpp>
#include <chrono>
#include <cmath>
#include <future>
#include <set>
#include <sstream>

namespace carlab {

using namespace carleman;

namespace {

using R = Rational;

// Exact geometry for the four dimension pairs, plus emptiness above k = d/2.
void suite_geometry(Verdict& v, const AcceptanceOptions&) {
  int failures = 0;
  auto expect = [&](bool ok) { failures += ok ? 0 : 1; };

  const auto s52 = special_points({5, 2});
  expect(s52.B == ExponentPoint{R(7, 8), R(3, 40)});
  expect(s52.D == ExponentPoint{R(7, 8), R(0)});
  expect(s52.F == ExponentPoint{R(7, 10), R(0)});
  expect(s52.A == ExponentPoint{R(1, 2), R(3, 10)});
  expect(!s52.G.has_value());
  const auto s72 = special_points({7, 2});
  expect(s72.G && *s72.G == ExponentPoint{R(55, 84), R(1, 12)});

  for (auto [d, k] : std::vector<std::pair<int, int>>{{5, 2}, {7, 2}, {3, 1}, {9, 3}}) {
    const DimensionPair dims{d, k};
    const auto s = special_points(dims);
    const R D = d, K = k;
    expect(D * s.E.x - s.E.y == (D - 2 + 2 * K) / 2);
    expect(s.E.x - s.E.y == 2 * K / (D + 2));
    expect(in_region(RegionId::Pentagon, dims, s.E));
    const bool has_G = 2 * k < d - 2;
    expect(s.G.has_value() == has_G);
    if (has_G) {
      const auto& G = *s.G;
      expect(G.x - G.y == 2 * K / D);
      // On segment [E, F]: collinear and between the endpoints.
      expect((G.x - s.E.x) * (s.F.y - s.E.y) == (G.y - s.E.y) * (s.F.x - s.E.x));
      expect(G.x >= std::min(s.E.x, s.F.x) && G.x <= std::max(s.E.x, s.F.x));
    }
    // Range: [G, G'] when G exists, otherwise the open gap line. Checked on a coarse
    // square lattice and, at a resolution that contains G exactly, on the gap line and
    // its two neighbouring lattice lines.
    auto want = [&](const ExponentPoint& P) {
      bool w = P.x - P.y == 2 * K / D && P.y > 0 && P.x < 1;
      if (w && has_G) w = P.x >= s.G->x && P.x <= dual_point(*s.G).x;
      return w;
    };
    auto probe = [&](const ExponentPoint& P) {
      expect(carleman_range(dims, P) == want(P));
      expect(dual_point(dual_point(P)) == P);
    };
    const int coarse = 24;
    for (int i = 0; i <= coarse; ++i)
      for (int j = 0; j <= coarse; ++j) probe({R(i, coarse), R(j, coarse)});
    const int N = 2 * d * (d - 1) * (d + 2);
    const R gap = 2 * K / D;
    for (int i = 0; i <= N; ++i) {
      const R x(i, N);
      for (int off : {-1, 0, 1}) {
        const R y = x - gap + R(off, N);
        if (y >= 0 && y <= 1) probe({x, y});
      }
    }
  }
  for (auto [d, k] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {5, 3}, {6, 3}}) {
    const int N = 48;
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j <= N; ++j) expect(!carleman_range({d, k}, {R(i, N), R(j, N)}));
  }
  v.check("exact_identity_failures", failures, "==", 0);
}

void suite_symbols(Verdict& v, const AcceptanceOptions& opt) {
  CounterRng rng(opt.seed, 201);
  const double eps0 = 1.0 / 32;
  double worst_rec = 0.0, worst_im = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const int k = 1 + static_cast<int>(rng.uniform() * 3);
    // Radii near the unit sphere and log-uniform times so that every dyadic piece is exercised.
    const double eta_sq = 1.0 + (rng.uniform() - 0.5) * 0.2;
    double tau = std::exp2(-12.0 + 14.0 * rng.uniform());
    if (rng.uniform() < 0.5) tau = -tau;
    SymbolSpec full = make_full(3, k), local = full, global = full;
    local.family = SymbolFamily::MLocal;
    global.family = SymbolFamily::MGlobal;
    local.eps0 = global.eps0 = eps0;
    const cplx f = eval_symbol_radial(full, eta_sq, tau);
    const cplx sum = eval_symbol_radial(local, eta_sq, tau) + eval_symbol_radial(global, eta_sq, tau);
    worst_rec = std::max(worst_rec, std::abs(sum - f) / std::abs(f));

    const double eps = std::ldexp(1.0, -5 - static_cast<int>(rng.uniform() * 6));
    const double e2 = 1.0 + eps0 * 4.0 * (rng.uniform() - 0.5);
    double t2 = 0.5 + 1.5 * rng.uniform();
    if (rng.uniform() < 0.5) t2 = -t2;
    const double direct = eval_symbol_radial(make_mtilde(3, k, eps, eps0), e2, t2).imag();
    const double literal = eval_im_mtilde(3, k, eps, eps0, e2, t2);
    if (direct != 0.0 || literal != 0.0)
      worst_im = std::max(worst_im, std::abs(direct - literal) / std::max(std::abs(direct), std::abs(literal)));
  }
  v.check("decomposition_max_rel_err", worst_rec, "<=", 1e-10);
  v.check("imag_expansion_max_rel_err", worst_im, "<=", 1e-10);
}

void suite_distributions(Verdict& v, const AcceptanceOptions& opt) {
  CounterRng rng(opt.seed, 301);
  double worst_dist = 0.0;
  for (int k : {2, 3})
    for (int n : {2, 3, 4})
      for (double rho : {0.8, 1.0, 1.3}) {
        const auto phi = TestFunction::random_poly_gauss(n, rng);
        worst_dist = std::max(worst_dist, verify_dist_identity(k, rho, phi, n).rel_err);
      }
  v.check("pullback_identity_max_rel_err", worst_dist, "<=", 1e-5);

  // Surface-measure constant 1/2 against an independent spherical point set.
  double worst_const = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto phi = TestFunction::random_poly_gauss(3, rng);
    const double a = pair_pullback(1, 1.0, phi, 3), b = pair_pullback_sampling(1.0, phi);
    worst_const = std::max(worst_const, std::abs(a - b) / std::abs(b));
  }
  v.check("surface_constant_max_rel_err", worst_const, "<=", 1e-8);

  double worst_counter = 0.0, worst_round = 0.0;
  for (auto [d, k] : std::vector<std::pair<int, int>>{{3, 2}, {5, 3}}) {
    for (int i = 0; i < 5; ++i) {
      CounterSetup s;
      s.d = d;
      s.k = k;
      s.eps = 1.0 / 32;
      s.delta = 1.0 / 32;
      s.tau = 0.6 + 1.3 * rng.uniform();
      const auto h = TestFunction::random_poly_gauss(d - 1, rng);
      const auto r = verify_counter_suite(s, h);
      worst_counter = std::max({worst_counter, r.induc.rel_err, r.rev.rel_err});
      worst_round = std::max(worst_round, r.round_trip.rel_err);
    }
  }
  v.check("counter_identities_max_rel_err", worst_counter, "<=", 1e-5);
  v.check("counter_round_trip_max_rel_err", worst_round, "<=", 1e-5);
}

void suite_kelvin(Verdict& v, const AcceptanceOptions&) {
  const auto u = RadialProfile::gaussian_annulus(0.1);
  for (double s : {1.0, 1.25}) {
    const double bound = s == 1.0 ? 1e-3 : 1e-2;
    const double e1 = verify_kelvin(u, s, {128, 4.0}).rel_err;
    const double e2 = verify_kelvin(u, s, {256, 8.0}).rel_err;
    const std::string tag = "s=" + fmt(s);
    v.check(tag + ":rel_err_n128", e1, "<=", bound);
    v.check(tag + ":rel_err_doubled_over_half", e2, "<=", 0.5 * e1);
  }
}

void suite_knapp(Verdict& v, const AcceptanceOptions& opt) {
  KnappScalingConfig cfg;
  if (!opt.knapp_eps.empty()) cfg.eps = opt.knapp_eps;
  const auto [lo, hi] = std::minmax_element(cfg.eps.begin(), cfg.eps.end());
  const double octaves = std::log2(*hi / *lo);
  if (octaves < 3.0 - 1e-12) {
    v.status = Status::Skip;
    v.detail = "insufficient octaves (" + fmt(octaves) + " < 3)";
    return;
  }
  const auto rescaled = knapp_scaling(KnappOperator::Rescaled, cfg);
  const auto unscaled = knapp_scaling(KnappOperator::Unscaled, cfg);
  v.check("rescaled_slope_minus_theory", std::abs(rescaled.fit.slope - *rescaled.fit.theory), "<=", 0.15);
  v.check("unscaled_slope_minus_theory", std::abs(unscaled.fit.slope - *unscaled.fit.theory), "<=", 0.15);
  v.info("rescaled_slope", rescaled.fit.slope);
  v.info("unscaled_slope", unscaled.fit.slope);
}

const std::vector<double>& lower_bound_eps() {
  static const std::vector<double> e{1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128, 1.0 / 256};
  return e;
}

void suite_lower_bound(Verdict& v, const AcceptanceOptions&) {
  const auto sweep = lower_bound_sweep(5, 2, lower_bound_eps(), 0.0);
  v.check("normalised_min_band_ratio", sweep.band_ratio, "<", 2.0);
  v.check("slope_minus_theory", std::abs(sweep.fit.slope - *sweep.fit.theory), "<=", 0.15);
  v.info("slope", sweep.fit.slope);
}

void suite_resonance(Verdict& v, const AcceptanceOptions&) {
  std::vector<double> eps;
  for (int e = 4; e <= 10; ++e) eps.push_back(std::ldexp(1.0, -e));
  const auto cs = resonance_constants(eps);
  std::vector<std::pair<double, double>> law;
  std::vector<double> i1a, i1w, i2, i4;
  for (const auto& c : cs) {
    // log |tilde I_2| against log log(1/eps): slope 1 means logarithmic growth.
    law.emplace_back(std::log(1.0 / c.eps), std::abs(c.tilde2));
    i1a.push_back(c.I1_min_annulus);
    i1w.push_back(c.I1_min_window);
    i2.push_back(c.I2_max);
    i4.push_back(c.I4_max);
  }
  const auto fit = fit_loglog(law);
  v.check("tilde_I2_loglog_slope_minus_1", std::abs(fit.slope - 1.0), "<=", 0.15);
  v.check("I1_min_annulus", *std::min_element(i1a.begin(), i1a.end()), ">", 0.0);
  v.check("I1_min_annulus_drift", drift(i1a), "<", 2.0);
  v.check("I1_min_window", *std::min_element(i1w.begin(), i1w.end()), ">", 0.0);
  v.check("I1_min_window_drift", drift(i1w), "<", 2.0);
  v.check("I2_sup_drift", drift(i2), "<", 2.0);
  v.check("I4_sup_drift", drift(i4), "<", 2.0);
  v.info("tilde_I2_loglog_slope", fit.slope);
}

void suite_ring(Verdict& v, const AcceptanceOptions& opt) {
  RingScalingConfig cfg;
  cfg.seed = opt.seed;
  const auto r = ring_scaling(cfg);
  v.check("slope_minus_theory", std::abs(r.fit.slope - *r.fit.theory), "<=", 0.2);
  v.info("slope", r.fit.slope);
  for (std::size_t i = 0; i < r.estimates.size(); ++i) {
    v.info("power_bound_j" + std::to_string(cfg.js[i]), r.estimates[i].value);
    v.info("l2_reference_j" + std::to_string(cfg.js[i]), r.l2_reference[i]);
  }
}

void suite_rewrite(Verdict& v, const AcceptanceOptions& opt) {
  CounterRng rng(opt.seed, 901);
  double worst = 0.0;
  for (auto [d, k] : std::vector<std::pair<int, int>>{{5, 2}, {7, 2}}) {
    const Phi5Spec spec{d, k, 0.125};
    for (int i = 0; i < 50; ++i) {
      const double eps = std::ldexp(1.0, -4 - static_cast<int>(rng.uniform() * 5));
      const double y = rng.uniform() / eps;
      const double t = 2.0 * rng.uniform() - 1.0;
      const cplx a = mtilde_radial(d, k, eps, spec, y, t);
      const cplx b = J_decomposition(d, k, eps, spec, y, t).total();
      worst = std::max(worst, std::abs(a - b) / std::abs(a));
    }
  }
  v.check("max_rel_err", worst, "<=", 1e-5);
}

}  // namespace

const std::vector<Suite>& acceptance_suites() {
  static const std::vector<Suite> suites{
      {"A1", "exact exponent geometry", 1.0, suite_geometry},
      {"A2", "symbol decomposition and imaginary expansion", 5.0, suite_symbols},
      {"A3", "pullback and counter identities", 120.0, suite_distributions},
      {"A4", "Kelvin intertwining", 120.0, suite_kelvin},
      {"A5", "Knapp scaling slopes", 600.0, suite_knapp},
      {"A6", "radial lower bound in d=5, k=2", 900.0, suite_lower_bound},
      {"A7", "resonance integral constants", 300.0, suite_resonance},
      {"A8", "ring-localised L2->L6 scaling", 600.0, suite_ring},
      {"A9", "Bessel rewrite cross-check", 300.0, suite_rewrite},
  };
  return suites;
}

Verdict run_suite(const Suite& s, const AcceptanceOptions& opt) {
  Verdict v;
  v.id = s.id;
  v.title = s.title;
  v.budget_seconds = s.budget_seconds;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    s.body(v, opt);
  } catch (const std::exception& e) {
    v.status = Status::Fail;
    v.detail = std::string("error: ") + e.what();
  }
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (v.status != Status::Fail) v.finish();
  return v;
}

RunReport run_acceptance(const std::string& selection, const AcceptanceOptions& opt, const json& config_echo) {
  std::vector<const Suite*> chosen;
  if (selection == "all") {
    for (const auto& s : acceptance_suites()) chosen.push_back(&s);
  } else {
    std::set<std::string> ids;
    std::stringstream ss(selection);
    for (std::string item; std::getline(ss, item, ',');) ids.insert(item);
    for (const auto& s : acceptance_suites())
      if (ids.erase(s.id)) chosen.push_back(&s);
    if (!ids.empty()) throw ConfigError("unknown acceptance suite '" + *ids.begin() + "'");
  }
  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  report.config = config_echo;
  report.fingerprint = bump_fingerprint();
  report.verdicts.resize(chosen.size());
  // Suites are independent; a small worker pool runs them, results are stored by index.
  const std::size_t workers = std::max(1, opt.threads);
  for (std::size_t start = 0; start < chosen.size(); start += workers) {
    std::vector<std::future<Verdict>> batch;
    for (std::size_t i = start; i < std::min(chosen.size(), start + workers); ++i)
      batch.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async,
                                 [&, i] { return run_suite(*chosen[i], opt); }));
    for (std::size_t i = 0; i < batch.size(); ++i) report.verdicts[start + i] = batch[i].get();
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace carlab
