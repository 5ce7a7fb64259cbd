#include "carlab/config.hpp"

#include <carleman/errors.hpp>
#include <carleman/rational.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace carlab {

using carleman::ConfigError;

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"regions", "symbols",   "spectral", "normest",
                                              "lowerbound", "identities", "accept"};
  return names;
}

const std::vector<std::string>& allowed_params(const std::string& experiment) {
  static const std::map<std::string, std::vector<std::string>> table{
      {"regions", {"d", "k", "alpha", "point", "emit_figure"}},
      {"symbols",
       {"family", "d", "k", "eps", "eps0", "delta", "j", "zeta", "zeta_derivative", "part", "require_dyadic",
        "grid_sample", "radius_range", "tau_range"}},
      {"spectral", {"spec", "in", "out"}},
      {"normest", {"kind", "d", "k", "p", "q", "eps", "out", "n", "restarts", "iterations"}},
      {"lowerbound", {"d", "k", "eps", "t", "delta0", "c0", "c1", "c2", "out"}},
      {"identities", {"suite", "out"}},
      {"accept", {"suite", "out", "eps"}},
  };
  auto it = table.find(experiment);
  if (it == table.end()) throw ConfigError("unknown experiment '" + experiment + "'");
  return it->second;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a flat JSON object");
  ExperimentConfig c;
  if (!j.contains("experiment") || !j["experiment"].is_string()) throw ConfigError("config needs a string 'experiment'");
  c.experiment = j["experiment"].get<std::string>();
  const auto& allowed = allowed_params(c.experiment);
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() || value.is_array()) throw ConfigError("config must be flat; key '" + key + "' is nested");
    if (key == "experiment") continue;
    if (key == "seed") {
      if (!value.is_number_integer() || value.get<std::int64_t>() < 0) throw ConfigError("'seed' must be a nonnegative integer");
      c.seed = value.get<std::uint64_t>();
    } else if (key == "out_dir") {
      c.out_dir = value.get<std::string>();
    } else if (key == "threads") {
      if (!value.is_number_integer() || value.get<int>() < 1) throw ConfigError("'threads' must be a positive integer");
      c.threads = value.get<int>();
    } else if (key.rfind("tolerance_", 0) == 0) {
      if (!value.is_number()) throw ConfigError("tolerance '" + key + "' must be numeric");
      c.tolerances[key] = value;
    } else if (std::find(allowed.begin(), allowed.end(), key) != allowed.end()) {
      c.params[key] = value;
    } else {
      throw ConfigError("unknown config key '" + key + "' for experiment '" + c.experiment + "'");
    }
  }
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed config " + path + ": " + e.what());
  }
  return from_json(j);
}

json ExperimentConfig::to_json() const {
  json j = params;
  j["experiment"] = experiment;
  j["seed"] = seed;
  j["out_dir"] = out_dir;
  j["threads"] = threads;
  for (const auto& [k, v] : tolerances.items()) j[k] = v;
  return j;
}

std::string ExperimentConfig::dump() const { return to_json().dump(2); }

std::string ExperimentConfig::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : dump()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string ExperimentConfig::str(const std::string& key, const std::string& fallback) const {
  if (!params.contains(key)) return fallback;
  const auto& v = params[key];
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return os.str();
  }
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  throw ConfigError("parameter '" + key + "' has an unsupported type");
}

double ExperimentConfig::num(const std::string& key, double fallback) const {
  if (!params.contains(key)) return fallback;
  const auto& v = params[key];
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_number(v.get<std::string>());
  throw ConfigError("parameter '" + key + "' must be a number");
}

int ExperimentConfig::integer(const std::string& key, int fallback) const {
  if (!params.contains(key)) return fallback;
  const auto& v = params[key];
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    const std::string t = v.get<std::string>();
    std::size_t used = 0;
    int out = 0;
    try {
      out = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == t.size() && used > 0) return out;
  }
  throw ConfigError("parameter '" + key + "' must be an integer");
}

double ExperimentConfig::tolerance(const std::string& name, double pinned) const {
  const std::string key = "tolerance_" + name;
  return tolerances.contains(key) ? tolerances[key].get<double>() : pinned;
}

double parse_number(const std::string& text) {
  if (text.empty()) throw ConfigError("empty number");
  if (const auto caret = text.find('^'); caret != std::string::npos) {
    const double base = parse_number(text.substr(0, caret));
    const double e = parse_number(text.substr(caret + 1));
    return std::pow(base, e);
  }
  if (text.find('/') != std::string::npos) return carleman::to_double(carleman::parse_rational(text));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("malformed number '" + text + "'");
  }
  if (used != text.size()) throw ConfigError("malformed number '" + text + "'");
  return v;
}

std::vector<double> parse_eps_list(const std::string& text) {
  std::vector<double> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    if (a.rfind("2^", 0) != 0 || b.rfind("2^", 0) != 0) throw ConfigError("ranges must read 2^a..2^b: " + text);
    const int ea = static_cast<int>(parse_number(a.substr(2))), eb = static_cast<int>(parse_number(b.substr(2)));
    const int step = ea <= eb ? 1 : -1;
    for (int e = ea;; e += step) {
      out.push_back(std::ldexp(1.0, e));
      if (e == eb) break;
    }
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
  if (out.empty()) throw ConfigError("empty eps list");
  return out;
}

}  // namespace carlab
