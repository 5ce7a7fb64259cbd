#include <CLI11.hpp>
#include <carleman/errors.hpp>
#include <fstream>
#include <iostream>
#include <map>

#include "carlab/commands.hpp"

namespace {

using carlab::json;

// Options gathered as strings; only the ones the user set reach the config.
struct Collected {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;

  void add(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
    options[key] = app->add_option(flag, values[key], help);
  }
  void fill(json& params) const {
    for (const auto& [key, opt] : options)
      if (opt->count() > 0) params[key] = values.at(key);
  }
};

json json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw carleman::ConfigError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw carleman::ConfigError("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"carlab: Carleman multiplier laboratory"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  int threads = 1;
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--out-dir", out_dir, "directory for relative output paths")->capture_default_str();
  app.add_option("--threads", threads, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  std::map<std::string, Collected> opts;

  auto* regions = app.add_subcommand("regions", "exponent-plane geometry");
  opts["regions"].add(regions, "--d", "d", "dimension");
  opts["regions"].add(regions, "--k", "k", "order");
  opts["regions"].add(regions, "--alpha", "alpha", "Bochner-Riesz index (defaults to k)");
  opts["regions"].add(regions, "--point", "point", "query point x,y");
  opts["regions"].add(regions, "--emit-figure", "emit_figure", "write figure JSON");

  std::string symbol_spec_path;
  auto* symbols = app.add_subcommand("symbols", "tabulate a multiplier over (|eta|, tau)");
  symbols->add_option("--spec", symbol_spec_path, "symbol spec JSON")->required();
  opts["symbols"].add(symbols, "--grid-sample", "grid_sample", "output CSV");
  opts["symbols"].add(symbols, "--radius-range", "radius_range", "a:b:n in |eta|");
  opts["symbols"].add(symbols, "--tau-range", "tau_range", "a:b:n in tau");

  auto* spectral = app.add_subcommand("spectral", "apply a multiplier to a grid field");
  auto* spectral_apply = spectral->add_subcommand("apply", "apply a multiplier");
  spectral->require_subcommand(1);
  opts["spectral"].add(spectral_apply, "--spec", "spec", "symbol spec JSON");
  opts["spectral"].add(spectral_apply, "--in", "in", "input field");
  opts["spectral"].add(spectral_apply, "--out", "out", "output field");
  for (auto* o : spectral_apply->get_options())
    if (o->get_name() != "--help") o->required();

  auto* normest = app.add_subcommand("normest", "norm estimates");
  auto* scaling = normest->add_subcommand("scaling", "fit a scaling law");
  normest->require_subcommand(1);
  for (auto [flag, key] : std::vector<std::pair<std::string, std::string>>{{"--kind", "kind"},
                                                                         {"--d", "d"},
                                                                         {"--k", "k"},
                                                                         {"--p", "p"},
                                                                         {"--q", "q"},
                                                                         {"--eps", "eps"},
                                                                         {"--out", "out"},
                                                                         {"--n", "n"},
                                                                         {"--restarts", "restarts"},
                                                                         {"--iterations", "iterations"}})
    opts["normest"].add(scaling, flag, key, key);

  auto* lowerbound = app.add_subcommand("lowerbound", "radial lower-bound sweep");
  for (const std::string key : {"d", "k", "eps", "t", "delta0", "c0", "c1", "c2", "out"})
    opts["lowerbound"].add(lowerbound, "--" + key, key, key);

  auto* identities = app.add_subcommand("identities", "integral identity checks");
  opts["identities"].add(identities, "--suite", "suite", "distid, counter or kelvin");
  opts["identities"].add(identities, "--out", "out", "results JSON");

  auto* accept = app.add_subcommand("accept", "acceptance criteria");
  opts["accept"].add(accept, "--suite", "suite", "all or comma-separated ids");
  opts["accept"].add(accept, "--out", "out", "report JSON");
  opts["accept"].add(accept, "--eps", "eps", "override the Knapp eps list");

  std::string config_path;
  auto* run = app.add_subcommand("run", "run a JSON experiment config");
  run->add_option("--config", config_path, "config file")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    carlab::ExperimentConfig cfg;
    if (run->parsed()) {
      cfg = carlab::ExperimentConfig::load(config_path);
    } else {
      json j = json::object();
      for (const auto& [name, collected] : opts) {
        if (!app.got_subcommand(name)) continue;
        j["experiment"] = name;
        if (name == "symbols") {
          const json spec = json_file(symbol_spec_path);
          if (!spec.is_object()) throw carleman::ConfigError("symbol spec must be a JSON object");
          for (const auto& [k, v] : spec.items()) j[k] = v;
        }
        collected.fill(j);
      }
      j["seed"] = seed;
      j["out_dir"] = out_dir;
      j["threads"] = threads;
      cfg = carlab::ExperimentConfig::from_json(j);
    }
    return carlab::run(cfg);
  } catch (const carleman::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
