#include "carleman/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "carleman/errors.hpp"
#include "carleman/quadrature.hpp"

namespace carleman {

namespace {

double exponent_p(const Rational& x) { return 1.0 / to_double(x); }

}  // namespace

KnappScalingResult knapp_scaling(KnappOperator op, const KnappScalingConfig& cfg) {
  if (cfg.eps.size() < 3) throw DomainError("Knapp scaling needs at least three eps values");
  const double p = exponent_p(cfg.P.x), q = exponent_p(cfg.P.y);
  KnappScalingResult out;
  std::vector<std::pair<double, double>> pairs;
  for (double eps : cfg.eps) {
    KnappGridParams grid = cfg.grid;
    grid.scale_tau = op == KnappOperator::Unscaled;
    const GridField f = make_knapp(cfg.d, cfg.k, eps, cfg.delta0, grid);
    SymbolSpec spec = op == KnappOperator::Rescaled ? make_mtilde(cfg.d, cfg.k, eps, cfg.eps0)
                                                    : make_meps(cfg.d, cfg.k, eps, cfg.eps0);
    spec.require_dyadic = false;
    if (cfg.imaginary_part) spec = spec.with_part(SymbolPart::Imag);
    auto e = certified_lower_bound(spec, f, p, q, "knapp(eps=" + std::to_string(eps) + ")");
    pairs.emplace_back(eps, e.value);
    out.estimates.push_back(std::move(e));
  }
  const auto kind = op == KnappOperator::Rescaled ? ExponentKind::TildeKnapp : ExponentKind::MeKnapp;
  out.fit = fit_scaling(std::move(pairs), kind, cfg.d, cfg.k, cfg.P);
  return out;
}

std::vector<GridAxis> ring_axes(const RingScalingConfig& cfg) {
  if (cfg.d != 3) throw DomainError("the ring window is laid out for d = 3");
  const double two_pi = 2 * std::numbers::pi;
  return {GridAxis{cfg.n_eta, two_pi / cfg.eta_step, 0.0}, GridAxis{cfg.n_eta, two_pi / cfg.eta_step, cfg.eta2_centre},
          GridAxis{cfg.n_tau, two_pi / cfg.tau_step, cfg.tau_centre}};
}

double ring_l2_reference(int d, int k, double eps, int j) {
  // ||M||_2^2 = int psi(tau)^2 int |zeta(s/w)|^2 |s + eps^2 tau^2 + 2 i eps tau|^{-2k} |dEta|, s = |eta|^2 - 1,
  // with the (d-1)-dimensional radial measure |S^{d-2}| r^{d-2} dr = |S^{d-2}| r^{d-3} ds / 2.
  if (d != 3) throw DomainError("ring reference is implemented for d = 3");
  const double w = std::ldexp(eps, j);
  const Cutoff psi = Cutoff::psi();
  auto inner = [&](double tau) {
    auto g = [&](double s) {
      const double z = psi(s / w);
      if (z == 0.0) return 0.0;
      const double a = s + eps * eps * tau * tau, b = 2 * eps * tau;
      return z * z / std::pow(a * a + b * b, k);
    };
    return integrate_panels(g, panel_edges(-2 * w, 2 * w, {-w, -0.5 * w, 0.5 * w, w}), 1e-14, 1e-11);
  };
  auto outer = [&](double tau) {
    const double ps = psi(tau);
    return ps == 0.0 ? 0.0 : ps * ps * inner(tau);
  };
  // Circle measure 2 pi r dr = pi ds; tau over [1/2, 2].
  const double I = std::numbers::pi * integrate_panels(outer, panel_edges(0.5, 2.0, {1.0}), 1e-14, 1e-10);
  return std::pow(2 * std::numbers::pi, -0.5 * d) * std::sqrt(I);
}

RingScalingResult ring_scaling(const RingScalingConfig& cfg) {
  const auto axes = ring_axes(cfg);
  RingScalingResult out;
  std::vector<std::pair<double, double>> pairs;
  PowerOptions opt;
  opt.max_iter = cfg.iterations;
  opt.keep_witness = false;
  for (int j : cfg.js) {
    const SymbolSpec spec = make_ring(cfg.d, cfg.k, cfg.eps, j);
    spec.validate();
    const SymbolTable table = tabulate_symbol(axes, spec);
    const SymbolTable adjoint = tabulate_symbol(axes, spec.conjugated());
    // T T^* style start: the kernel of the adjoint.
    GridField kernel(axes, Domain::Frequency);
    for (std::size_t i = 0; i < kernel.size(); ++i) kernel[i] = adjoint[i];
    auto e = power_method_restarts(table, adjoint, cfg.p, cfg.q, axes, cfg.random_restarts,
                                   cfg.seed + static_cast<std::uint64_t>(j), {{"adjoint-kernel", kernel.to_space()}},
                                   opt);
    pairs.emplace_back(std::ldexp(cfg.eps, j), e.value);
    out.estimates.push_back(std::move(e));
    out.l2_reference.push_back(ring_l2_reference(cfg.d, cfg.k, cfg.eps, j));
  }
  out.fit = fit_scaling(std::move(pairs), ExponentKind::L2Ring, cfg.d, cfg.k);
  return out;
}

LowerBoundSweep lower_bound_sweep(int d, int k, const std::vector<double>& eps, double t,
                                  const LowerBoundParams& base) {
  LowerBoundSweep out;
  const Phi5Spec spec{d, k, base.delta0};
  std::vector<double> normalised;
  for (double e : eps) {
    LowerBoundParams params = base;
    params.d = d;
    params.k = k;
    params.eps = e;
    params.resolve();
    const auto S = frak_S_sample(params);
    if (S.values.empty()) throw DomainError("empty sample set: " + S.empty_reason);
    double mn = std::numeric_limits<double>::infinity();
    for (double y : S.values) {
      LowerBoundRow row;
      row.eps = e;
      row.y = y;
      row.t = t;
      row.modulus = std::abs(mtilde_radial(d, k, e, spec, y, t));
      row.normalised = std::pow(e, k - 0.5 * d) * row.modulus;
      row.in_S = true;
      mn = std::min(mn, row.modulus);
      out.rows.push_back(row);
    }
    out.minima.emplace_back(e, mn);
    normalised.push_back(std::pow(e, k - 0.5 * d) * mn);
  }
  out.band_ratio = drift(normalised);
  out.fit = fit_scaling(out.minima, ExponentKind::TildeLower, d, k, ExponentPoint{Rational(1, 2), Rational(0)});
  return out;
}

std::vector<ResonanceConstants> resonance_constants(const std::vector<double>& eps, const LowerBoundParams& base) {
  std::vector<ResonanceConstants> out;
  const Phi5Spec spec{base.d, base.k, base.delta0};
  std::vector<double> taus;
  for (int i = 0; i < 7; ++i) taus.push_back(0.5 + 0.25 * i);
  auto linspace = [](double a, double b, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(a + (b - a) * i / (n - 1));
    return v;
  };
  for (double e : eps) {
    LowerBoundParams params = base;
    params.eps = e;
    params.resolve();
    ResonanceConstants c;
    c.eps = e;
    c.tilde2 = I_integral(IWhich::Tilde2, 1.0, 0.0, e, spec);
    c.I1_min_annulus = c.I1_min_window = std::numeric_limits<double>::infinity();
    for (double tau : taus) {
      for (double y : linspace(params.mu / (4 * e), params.mu / (2 * e), 4))
        c.I1_min_annulus = std::min(c.I1_min_annulus, I_integral(IWhich::I1, tau, y, e, spec));
      for (double y : linspace(params.c1 / e, params.c2 / e, 4)) {
        c.I1_min_window = std::min(c.I1_min_window, I_integral(IWhich::I1, tau, y, e, spec));
        c.I4_max = std::max(c.I4_max, std::abs(I_integral(IWhich::I4, tau, y, e, spec)));
      }
      auto ys = linspace(0.1, 4 / e, 15);
      ys.insert(ys.begin(), 0.0);
      for (double y : ys) c.I2_max = std::max(c.I2_max, std::abs(I_integral(IWhich::I2, tau, y, e, spec)));
    }
    out.push_back(c);
  }
  return out;
}

double drift(const std::vector<double>& values) {
  if (values.empty()) return std::numeric_limits<double>::infinity();
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (!(*lo > 0)) return std::numeric_limits<double>::infinity();
  return *hi / *lo;
}

}  // namespace carleman
