#pragma once
#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

namespace carlab {

using nlohmann::json;

// Flat JSON experiment description. Reserved keys: experiment, seed, out_dir, threads and
// tolerance_<name>; everything else is an experiment parameter checked against a whitelist.
struct ExperimentConfig {
  std::string experiment;
  json params = json::object();
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  int threads = 1;
  json tolerances = json::object();

  static ExperimentConfig from_json(const json& j);
  static ExperimentConfig load(const std::string& path);
  json to_json() const;
  std::string dump() const;  // canonical text, stable across round trips
  std::string hash() const;  // 16 hex digits of FNV-1a over dump()

  // Typed parameter access with defaults; wrong types raise carleman::ConfigError.
  std::string str(const std::string& key, const std::string& fallback) const;
  double num(const std::string& key, double fallback) const;
  int integer(const std::string& key, int fallback) const;
  double tolerance(const std::string& name, double pinned) const;
};

const std::vector<std::string>& experiment_names();
const std::vector<std::string>& allowed_params(const std::string& experiment);

// "2^-3..2^-6" gives every power of two between the ends; "a,b,c" lists values;
// single values are accepted. Rationals such as "1/8" are allowed in lists.
std::vector<double> parse_eps_list(const std::string& text);
double parse_number(const std::string& text);

}  // namespace carlab
