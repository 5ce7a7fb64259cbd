#include "carleman/normest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "carleman/errors.hpp"
#include "carleman/rng.hpp"

namespace carleman {

std::string to_string(ExponentKind kind) {
  switch (kind) {
    case ExponentKind::MeUpper: return "me_upper";
    case ExponentKind::MeKnapp: return "me_knapp";
    case ExponentKind::TildeUpper: return "tilde_upper";
    case ExponentKind::TildeLower: return "tilde_lower";
    case ExponentKind::L2Ring: return "l2_ring";
    case ExponentKind::TildeKnapp: return "tilde_knapp";
  }
  return "unknown";
}

ExponentKind parse_exponent_kind(const std::string& text) {
  for (auto k : {ExponentKind::MeUpper, ExponentKind::MeKnapp, ExponentKind::TildeUpper, ExponentKind::TildeLower,
                 ExponentKind::L2Ring, ExponentKind::TildeKnapp})
    if (to_string(k) == text) return k;
  throw ConfigError("unknown exponent kind: " + text);
}

Rational theoretical_exponent_exact(ExponentKind kind, int d, int k, const ExponentPoint& P) {
  if (!in_square(P)) throw DomainError("exponent point outside the unit square");
  const Rational D = d, K = k;
  switch (kind) {
    case ExponentKind::MeUpper: return D * P.x - P.y - (D - 2 + 2 * K) / 2;
    case ExponentKind::MeKnapp: return (D + 2) / 2 * (P.x - P.y) - K;
    case ExponentKind::TildeUpper: return (D - 1) * P.x - (D - 2 + 2 * K) / 2;
    case ExponentKind::TildeLower: return -(D - 1) * P.y + D / 2 - K;
    case ExponentKind::L2Ring: return Rational(1, 2) - K;
    case ExponentKind::TildeKnapp: return D / 2 * (P.x - P.y) - K;
  }
  throw ConfigError("unknown exponent kind");
}

double theoretical_exponent(ExponentKind kind, int d, int k, const ExponentPoint& P) {
  return to_double(theoretical_exponent_exact(kind, d, k, P));
}

NormEstimate certified_lower_bound(const SymbolTable& table, const GridField& f, double p, double q,
                                   std::string witness) {
  if (!(p >= 1) || !(q >= 1)) throw DomainError("norm estimates need p, q >= 1");
  const double nf = lp_norm(f, p);
  if (!(nf > 0)) throw DomainError("zero witness");
  NormEstimate e;
  e.value = lp_norm(apply_multiplier(f, table), q) / nf;
  e.p = p;
  e.q = q;
  e.witness = std::move(witness);
  e.method = EstimateMethod::ExplicitWitness;
  return e;
}

NormEstimate certified_lower_bound(const SymbolSpec& spec, const GridField& f, double p, double q,
                                   std::string witness) {
  return certified_lower_bound(tabulate_symbol(f.axes(), spec), f, p, q, std::move(witness));
}

GridField dualize(const GridField& h, double r) {
  GridField g = h.to_space();
  for (auto& v : g.samples()) {
    const double a = std::abs(v);
    v = a == 0.0 ? cplx{0.0, 0.0} : v * std::pow(a, r - 2.0);
  }
  return g;
}

namespace {

void normalise(GridField& f, double p) {
  const double n = lp_norm(f, p);
  if (n > 0 && std::isfinite(n))
    for (auto& v : f.samples()) v /= n;
}

}  // namespace

NormEstimate power_method(const SymbolTable& table, const SymbolTable& adjoint, double p, double q,
                          const GridField& init, const PowerOptions& opt, std::string witness) {
  if (!(p > 1) || !(q > 1) || std::isinf(p) || std::isinf(q)) throw DomainError("power method needs 1 < p, q < inf");
  const double pd = p / (p - 1.0);
  NormEstimate best;
  best.p = p;
  best.q = q;
  best.method = EstimateMethod::PowerMethod;
  best.witness = witness;
  GridField f = init.to_space();
  normalise(f, p);
  double prev = -1.0;
  for (int it = 0; it < opt.max_iter; ++it) {
    const double nf = lp_norm(f, p);
    if (!(nf > 0)) {
      best.warning = "degenerate init: zero field";
      break;
    }
    const GridField g = apply_multiplier(f, table);
    const double val = lp_norm(g, q) / nf;
    if (!std::isfinite(val)) {
      best.warning = "non-finite intermediate; returning last valid witness";
      break;
    }
    best.history.push_back(val);
    if (val > best.value || !best.witness_field) {
      best.value = std::max(best.value, val);
      if (opt.keep_witness) best.witness_field = f;
    }
    if (val == 0.0) {
      best.warning = "degenerate init: operator annihilates the witness";
      break;
    }
    if (prev > 0 && std::abs(val - prev) <= opt.tol * val) break;
    prev = val;
    f = apply_multiplier(dualize(g, q), adjoint);
    f = dualize(f, pd);
    normalise(f, p);
  }
  if (!opt.keep_witness) best.witness_field.reset();
  return best;
}

NormEstimate power_method(const SymbolSpec& spec, double p, double q, const GridField& init,
                          const PowerOptions& opt) {
  return power_method(tabulate_symbol(init.axes(), spec), tabulate_symbol(init.axes(), spec.conjugated()), p, q, init,
                      opt, "init");
}

GridField random_field(const std::vector<GridAxis>& axes, std::uint64_t seed, std::uint64_t stream) {
  CounterRng rng(seed, stream);
  GridField f(axes, Domain::Space);
  for (auto& v : f.samples()) {
    // Box-Muller keeps the stream independent of the standard library.
    const double u1 = 1.0 - rng.uniform();
    const double u2 = rng.uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    v = {r * std::cos(2 * std::numbers::pi * u2), r * std::sin(2 * std::numbers::pi * u2)};
  }
  return f;
}

NormEstimate power_method_restarts(const SymbolTable& table, const SymbolTable& adjoint, double p, double q,
                                   const std::vector<GridAxis>& axes, int random_restarts, std::uint64_t seed,
                                   const std::vector<std::pair<std::string, GridField>>& extra_inits,
                                   const PowerOptions& opt) {
  NormEstimate best;
  best.p = p;
  best.q = q;
  best.method = EstimateMethod::PowerMethod;
  auto consider = [&](NormEstimate e) {
    if (e.value > best.value || best.witness.empty()) best = std::move(e);
  };
  for (int r = 0; r < random_restarts; ++r)
    consider(power_method(table, adjoint, p, q, random_field(axes, seed, static_cast<std::uint64_t>(r)), opt,
                          "random#" + std::to_string(r)));
  for (const auto& [name, init] : extra_inits) consider(power_method(table, adjoint, p, q, init, opt, name));
  return best;
}

ScalingFit fit_loglog(std::vector<std::pair<double, double>> pairs) {
  if (pairs.size() < 3) throw DomainError("scaling fits need at least 3 pairs");
  std::vector<double> xs;
  for (const auto& [e, v] : pairs) {
    if (!(e > 0) || !(v > 0)) throw DomainError("scaling fits need positive abscissae and values");
    for (double x : xs)
      if (x == std::log(e)) throw DomainError("degenerate abscissae in scaling fit");
    xs.push_back(std::log(e));
  }
  const double n = static_cast<double>(pairs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [e, v] : pairs) {
    const double x = std::log(e), y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  ScalingFit fit;
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  for (const auto& [e, v] : pairs)
    fit.max_residual = std::max(fit.max_residual, std::abs(std::log(v) - fit.intercept - fit.slope * std::log(e)));
  fit.pairs = std::move(pairs);
  return fit;
}

ScalingFit fit_scaling(std::vector<std::pair<double, double>> pairs, std::optional<ExponentKind> kind, int d, int k,
                       std::optional<ExponentPoint> P) {
  ScalingFit fit = fit_loglog(std::move(pairs));
  if (kind) {
    fit.kind = kind;
    fit.theory = theoretical_exponent(*kind, d, k, P ? *P : ExponentPoint{Rational(1, 2), Rational(1, 2)});
  }
  return fit;
}

}  // namespace carleman
