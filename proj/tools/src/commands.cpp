#include "carlab/commands.hpp"

#include <carleman/errors.hpp>
#include <carleman/experiments.hpp>
#include <carleman/field_io.hpp>
#include <carleman/identities.hpp>
#include <carleman/kelvin.hpp>
#include <carleman/regions.hpp>
#include <carleman/rng.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "carlab/acceptance.hpp"
#include "carlab/report.hpp"

namespace carlab {

using namespace carleman;

namespace {

const std::map<std::string, SymbolFamily>& family_names() {
  static const std::map<std::string, SymbolFamily> m{
      {"full", SymbolFamily::Full},           {"m_local", SymbolFamily::MLocal},
      {"m_global", SymbolFamily::MGlobal},    {"m_eps", SymbolFamily::MEps},
      {"m_tilde", SymbolFamily::MTilde},      {"m_tilde_gen", SymbolFamily::MTildeGen},
      {"ring", SymbolFamily::RingLocalized},  {"constant", SymbolFamily::Constant},
      {"full_inverse", SymbolFamily::FullInverse}};
  return m;
}

const std::map<std::string, SymbolPart>& part_names() {
  static const std::map<std::string, SymbolPart> m{{"complex", SymbolPart::Complex},
                                                   {"conjugate", SymbolPart::Conjugate},
                                                   {"real", SymbolPart::Real},
                                                   {"imag", SymbolPart::Imag}};
  return m;
}

template <class Map>
auto lookup(const Map& m, const std::string& key, const std::string& what) {
  auto it = m.find(key);
  if (it == m.end()) throw ConfigError("unknown " + what + " '" + key + "'");
  return it->second;
}

template <class Map, class V>
std::string name_of(const Map& m, V v) {
  for (const auto& [k, x] : m)
    if (x == v) return k;
  return "?";
}

Cutoff cutoff_named(const std::string& name) {
  if (name == "psi") return Cutoff::psi();
  if (name == "psi0") return Cutoff::psi0();
  if (name == "knapp_bump") return Cutoff::knapp_bump();
  throw ConfigError("unknown cutoff '" + name + "'");
}

double num_field(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (j[key].is_number()) return j[key].get<double>();
  if (j[key].is_string()) return parse_number(j[key].get<std::string>());
  throw ConfigError("'" + key + "' must be numeric");
}

json point_json(const ExponentPoint& p) {
  return {{"x", carleman::to_string(p.x)}, {"y", carleman::to_string(p.y)}, {"x_float", to_double(p.x)}, {"y_float", to_double(p.y)}};
}

json pairing_json(const PairingResult& r) {
  return {{"lhs_re", r.lhs.real()}, {"lhs_im", r.lhs.imag()},  {"rhs_re", r.rhs.real()},
          {"rhs_im", r.rhs.imag()}, {"abs_err", r.abs_err},   {"rel_err", r.rel_err},
          {"quadrature_nodes", r.quadrature_nodes}};
}

void write_json(const std::string& path, const json& j) { write_text_atomic(path, j.dump(2) + "\n"); }

// Exponent from a p or q string ("4/3", "4", "inf"): 1/p as an exact rational.
Rational reciprocal_exponent(const std::string& text) {
  if (text == "inf" || text == "infinity") return Rational(0);
  const Rational v = parse_rational(text);
  if (v < 1) throw ConfigError("exponents must be at least 1: " + text);
  return 1 / v;
}

int cmd_regions(const ExperimentConfig& cfg) {
  DimensionPair dims{cfg.integer("d", 5), cfg.integer("k", 2), std::nullopt};
  if (cfg.params.contains("alpha")) dims.alpha = parse_rational(cfg.str("alpha", "1"));
  json out;
  out["d"] = dims.d;
  out["k"] = dims.k;
  out["bump_fingerprint"] = bump_fingerprint();
  if (2 * dims.k < dims.d && dims.d >= 3) {
    const auto s = special_points(dims);
    json pts;
    pts["A"] = point_json(s.A);
    pts["B"] = point_json(s.B);
    pts["C"] = point_json(s.C);
    pts["D"] = point_json(s.D);
    pts["E"] = point_json(s.E);
    pts["F"] = point_json(s.F);
    pts["H"] = point_json(s.H);
    if (s.G) pts["G"] = point_json(*s.G);
    out["points"] = pts;
  } else {
    out["points"] = json::object();
    out["note"] = "special points need k < d/2; the Carleman range is empty";
  }
  if (cfg.params.contains("point")) {
    const auto P = parse_point(cfg.str("point", ""));
    out["query"] = point_json(P);
    out["dual"] = point_json(dual_point(P));
    out["in_T"] = in_region(RegionId::T_kd, dims, P);
    out["in_P_alpha"] = in_region(RegionId::P_alpha, dims, P);
    out["in_pentagon"] = in_region(RegionId::Pentagon, dims, P);
    out["on_gap_line"] = in_region(RegionId::GapLine, dims, P);
    out["carleman_range"] = carleman_range(dims, P);
  }
  if (cfg.params.contains("emit_figure")) {
    const auto fig = emit_figure_data(dims);
    json f;
    f["d"] = dims.d;
    f["k"] = dims.k;
    f["points"] = json::array();
    for (const auto& lp : fig.points) {
      json p = point_json(lp.point);
      p["label"] = lp.label;
      f["points"].push_back(p);
    }
    f["polylines"] = json::array();
    for (const auto& pl : fig.polylines) {
      json l{{"label", pl.label}, {"closed", pl.closed}, {"open_endpoints", pl.open_endpoints}};
      l["vertices"] = json::array();
      for (const auto& v : pl.vertices) l["vertices"].push_back(point_json(v));
      f["polylines"].push_back(l);
    }
    write_json(resolve_output(cfg, cfg.str("emit_figure", "")), f);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct Range {
  double a, b;
  int n;
  double at(int i) const { return n == 1 ? a : a + (b - a) * i / (n - 1); }
};

Range parse_range(const std::string& text) {
  const auto c1 = text.find(':'), c2 = text.rfind(':');
  if (c1 == std::string::npos || c1 == c2) throw ConfigError("range must read a:b:n: " + text);
  Range r{parse_number(text.substr(0, c1)), parse_number(text.substr(c1 + 1, c2 - c1 - 1)),
          static_cast<int>(parse_number(text.substr(c2 + 1)))};
  if (r.n < 1) throw ConfigError("range needs n >= 1: " + text);
  return r;
}

int cmd_symbols(const ExperimentConfig& cfg) {
  const SymbolSpec spec = symbol_spec_from_json(cfg.params);
  spec.validate();
  const Range rr = parse_range(cfg.str("radius_range", "0.9:1.1:41"));
  const Range tr = parse_range(cfg.str("tau_range", "-2:2:81"));
  json summary{{"spec", spec.describe()}, {"bump_fingerprint", bump_fingerprint()}};
  if (cfg.params.contains("grid_sample")) {
    const std::string path = resolve_output(cfg, cfg.str("grid_sample", ""));
    CsvWriter csv(path, cfg, {"eta_norm", "tau", "re", "im", "abs"});
    for (int i = 0; i < rr.n; ++i) {
      for (int j = 0; j < tr.n; ++j) {
        const double r = rr.at(i), t = tr.at(j);
        cplx v;
        try {
          v = eval_symbol_radial(spec, r * r, t);
        } catch (const SingularFrequency&) {
          v = {NAN, NAN};
        }
        csv.row({fmt(r), fmt(t), fmt(v.real()), fmt(v.imag()), fmt(std::abs(v))});
      }
    }
    csv.close();
    summary["grid_sample"] = path;
    summary["rows"] = rr.n * tr.n;
  }
  std::cout << summary.dump(2) << "\n";
  return 0;
}

json load_flat(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed JSON in " + path + ": " + e.what());
  }
}

int cmd_spectral(const ExperimentConfig& cfg) {
  const SymbolSpec spec = symbol_spec_from_json(load_flat(cfg.str("spec", "")));
  spec.validate();
  const GridField f = read_field(cfg.str("in", ""));
  const GridField g = apply_multiplier(f, spec);
  const std::string out = resolve_output(cfg, cfg.str("out", "out.bin"));
  write_field(g, out, spec.describe());
  std::cout << json{{"spec", spec.describe()}, {"out", out}, {"l2_in", lp_norm(f, 2)}, {"l2_out", lp_norm(g, 2)}}.dump(2)
            << "\n";
  return 0;
}

json fit_json(const ScalingFit& fit, double tol) {
  json j;
  j["pairs"] = json::array();
  for (const auto& [e, v] : fit.pairs) j["pairs"].push_back({{"eps", e}, {"value", v}});
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["max_residual"] = fit.max_residual;
  if (fit.theory) j["theory"] = *fit.theory;
  if (fit.kind) j["kind"] = carleman::to_string(*fit.kind);
  j["tolerance"] = tol;
  j["verdict"] = fit.theory ? (fit.within(tol) ? "pass" : "fail") : "no-theory";
  return j;
}

int cmd_normest(const ExperimentConfig& cfg) {
  const ExponentKind kind = parse_exponent_kind(cfg.str("kind", "me_knapp"));
  const int d = cfg.integer("d", 3), k = cfg.integer("k", 1);
  const ExponentPoint P = make_point(reciprocal_exponent(cfg.str("p", "4/3")), reciprocal_exponent(cfg.str("q", "4")));
  const auto eps = parse_eps_list(cfg.str("eps", "2^-3..2^-6"));
  ScalingFit fit;
  double tol = cfg.tolerance("slope", 0.15);
  // Grids certify lower bounds only. An upper-bound exponent a is checked for consistency:
  // a witness decaying like eps^s with s < a - tol would contradict it.
  bool upper = false;
  switch (kind) {
    case ExponentKind::MeKnapp:
    case ExponentKind::TildeKnapp:
    case ExponentKind::MeUpper:
    case ExponentKind::TildeUpper: {
      upper = kind == ExponentKind::MeUpper || kind == ExponentKind::TildeUpper;
      KnappScalingConfig kc;
      kc.d = d;
      kc.k = k;
      kc.P = P;
      kc.eps = eps;
      kc.grid.n = cfg.integer("n", 64);
      const bool unscaled = kind == ExponentKind::MeKnapp || kind == ExponentKind::MeUpper;
      fit = knapp_scaling(unscaled ? KnappOperator::Unscaled : KnappOperator::Rescaled, kc).fit;
      if (upper) {
        const auto witness = fit.pairs;
        fit = fit_scaling(witness, kind, d, k, P);
      }
      break;
    }
    case ExponentKind::L2Ring: {
      RingScalingConfig rc;
      rc.d = d;
      rc.k = k;
      rc.eps = eps.front();
      rc.p = 1.0 / to_double(P.x);
      rc.q = 1.0 / to_double(P.y);
      rc.seed = cfg.seed;
      rc.random_restarts = cfg.integer("restarts", 2);
      rc.iterations = cfg.integer("iterations", 25);
      fit = ring_scaling(rc).fit;
      tol = cfg.tolerance("slope", 0.2);
      break;
    }
    case ExponentKind::TildeLower: {
      if (P.y != 0) throw ConfigError("the radial lower bound is evaluated pointwise, so q must be inf");
      fit = lower_bound_sweep(d, k, eps).fit;
      break;
    }
    default:
      throw ConfigError("no scaling experiment for kind '" + carleman::to_string(kind) + "'");
  }
  json out = fit_json(fit, tol);
  bool ok = fit.within(tol);
  if (upper) {
    ok = fit.theory && fit.slope >= *fit.theory - tol;
    out["verdict"] = ok ? "consistent" : "inconsistent";
    out["comparison"] = "witness slope >= upper-bound exponent - tolerance";
  }
  out["config_hash"] = cfg.hash();
  out["bump_fingerprint"] = bump_fingerprint();
  out["P"] = point_json(P);
  const std::string path = resolve_output(cfg, cfg.str("out", "fit.json"));
  write_json(path, out);
  std::cout << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_lowerbound(const ExperimentConfig& cfg) {
  const int d = cfg.integer("d", 5), k = cfg.integer("k", 2);
  LowerBoundParams base;
  base.delta0 = cfg.num("delta0", base.delta0);
  base.c0 = cfg.num("c0", base.c0);
  base.c1 = cfg.num("c1", base.c1);
  base.c2 = cfg.num("c2", base.c2);
  const auto sweep = lower_bound_sweep(d, k, parse_eps_list(cfg.str("eps", "2^-4..2^-8")), cfg.num("t", 0.0), base);
  const std::string path = resolve_output(cfg, cfg.str("out", "lb.csv"));
  CsvWriter csv(path, cfg, {"eps", "y_abs", "t", "abs_mf", "normalised_abs_mf", "in_S"});
  for (const auto& r : sweep.rows)
    csv.row({fmt(r.eps), fmt(r.y), fmt(r.t), fmt(r.modulus), fmt(r.normalised), r.in_S ? "1" : "0"});
  csv.close();
  json out{{"csv", path}, {"band_ratio", sweep.band_ratio}, {"fit", fit_json(sweep.fit, 0.15)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_identities(const ExperimentConfig& cfg) {
  const std::string suite = cfg.str("suite", "distid");
  CounterRng rng(cfg.seed, 17);
  json results = json::array();
  double worst = 0.0;
  if (suite == "distid") {
    for (int k : {1, 2, 3})
      for (int n : {2, 3, 4})
        for (double rho : {0.8, 1.0, 1.3}) {
          const auto phi = TestFunction::random_poly_gauss(n, rng);
          const auto r = verify_dist_identity(k, rho, phi, n);
          json j = pairing_json(r);
          j["k"] = k;
          j["n"] = n;
          j["rho"] = rho;
          j["phi"] = phi.name();
          results.push_back(j);
          worst = std::max(worst, r.rel_err);
        }
  } else if (suite == "counter") {
    for (auto [d, k] : std::vector<std::pair<int, int>>{{3, 2}, {5, 3}}) {
      CounterSetup s;
      s.d = d;
      s.k = k;
      s.tau = 0.6 + 1.3 * rng.uniform();
      const auto h = TestFunction::random_poly_gauss(d - 1, rng);
      const auto r = verify_counter_suite(s, h);
      for (auto [name, pr] : {std::pair{"induc", r.induc}, std::pair{"rev", r.rev}, std::pair{"round_trip", r.round_trip}}) {
        json j = pairing_json(pr);
        j["identity"] = name;
        j["d"] = d;
        j["k"] = k;
        j["tau"] = s.tau;
        results.push_back(j);
        worst = std::max(worst, pr.rel_err);
      }
    }
  } else if (suite == "kelvin") {
    const auto u = RadialProfile::gaussian_annulus(0.1);
    for (double s : {1.0, 1.25})
      for (auto g : {KelvinGrid{128, 4.0}, KelvinGrid{256, 8.0}}) {
        const auto r = verify_kelvin(u, s, g);
        json j = pairing_json(r);
        j["s"] = s;
        j["n"] = g.n;
        j["period"] = g.period;
        results.push_back(j);
      }
  } else {
    throw ConfigError("unknown identities suite '" + suite + "' (distid, counter, kelvin)");
  }
  json out{{"suite", suite}, {"results", results}, {"max_rel_err", worst}, {"config_hash", cfg.hash()},
           {"bump_fingerprint", bump_fingerprint()}};
  write_json(resolve_output(cfg, cfg.str("out", "results.json")), out);
  std::cout << json{{"suite", suite}, {"entries", results.size()}, {"max_rel_err", worst}}.dump(2) << "\n";
  return 0;
}

int cmd_accept(const ExperimentConfig& cfg) {
  AcceptanceOptions opt;
  opt.seed = cfg.seed;
  opt.threads = cfg.threads;
  if (cfg.params.contains("eps")) opt.knapp_eps = parse_eps_list(cfg.str("eps", ""));
  const RunReport report = run_acceptance(cfg.str("suite", "all"), opt, cfg.to_json());
  for (const auto& v : report.verdicts) std::cout << v.line() << "\n";
  report.write(resolve_output(cfg, cfg.str("out", "report.json")));
  return report.all_pass() ? 0 : 1;
}

}  // namespace

SymbolSpec symbol_spec_from_json(const json& j) {
  static const std::vector<std::string> keys{"family", "d", "k", "eps", "eps0", "delta", "j", "zeta",
                                             "zeta_derivative", "part", "require_dyadic", "constant"};
  SymbolSpec s;
  for (const auto& [key, v] : j.items()) {
    if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
    // Config-level keys travel alongside the spec in the symbols subcommand.
    if (key == "grid_sample" || key == "radius_range" || key == "tau_range") continue;
    throw ConfigError("unknown symbol spec key '" + key + "'");
  }
  s.family = lookup(family_names(), j.value("family", std::string("full")), "symbol family");
  s.d = j.value("d", 3);
  s.k = j.value("k", 1);
  s.eps = num_field(j, "eps", s.eps);
  s.eps0 = num_field(j, "eps0", s.eps0);
  s.delta = num_field(j, "delta", s.delta);
  s.j = j.value("j", 0);
  s.constant = cplx(num_field(j, "constant", 1.0), 0.0);
  s.zeta = cutoff_named(j.value("zeta", s.family == SymbolFamily::RingLocalized ? std::string("psi") : std::string("psi0")));
  if (j.contains("zeta_derivative")) s.zeta = s.zeta.derivative(j["zeta_derivative"].get<std::size_t>());
  s.part = lookup(part_names(), j.value("part", std::string("complex")), "symbol part");
  s.require_dyadic = j.value("require_dyadic", true);
  return s;
}

json symbol_spec_to_json(const SymbolSpec& s) {
  return {{"family", name_of(family_names(), s.family)},
          {"d", s.d},
          {"k", s.k},
          {"eps", s.eps},
          {"eps0", s.eps0},
          {"delta", s.delta},
          {"j", s.j},
          {"zeta", s.zeta.name()},
          {"zeta_derivative", s.zeta.derivative_order()},
          {"part", name_of(part_names(), s.part)},
          {"require_dyadic", s.require_dyadic}};
}

std::string resolve_output(const ExperimentConfig& cfg, const std::string& path) {
  if (path.empty()) throw ConfigError("missing output path");
  const std::filesystem::path p(path);
  if (p.is_absolute()) return p.string();
  return (std::filesystem::path(cfg.out_dir) / p).string();
}

int run(const ExperimentConfig& cfg) {
  const std::string& e = cfg.experiment;
  if (e == "regions") return cmd_regions(cfg);
  if (e == "symbols") return cmd_symbols(cfg);
  if (e == "spectral") return cmd_spectral(cfg);
  if (e == "normest") return cmd_normest(cfg);
  if (e == "lowerbound") return cmd_lowerbound(cfg);
  if (e == "identities") return cmd_identities(cfg);
  if (e == "accept") return cmd_accept(cfg);
  throw ConfigError("unknown experiment '" + e + "'");
}

}  // namespace carlab
