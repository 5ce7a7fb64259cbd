#pragma once
#include <carleman/symbols.hpp>
#include <string>

#include "carlab/config.hpp"

namespace carlab {

// Executes a validated config and returns the process exit code
// (0 iff every verdict the experiment produces passes).
int run(const ExperimentConfig& cfg);

// SymbolSpec from the flat keys family, d, k, eps, eps0, delta, j, zeta, zeta_derivative, part, require_dyadic.
carleman::SymbolSpec symbol_spec_from_json(const json& j);
json symbol_spec_to_json(const carleman::SymbolSpec& s);

std::string resolve_output(const ExperimentConfig& cfg, const std::string& path);

}  // namespace carlab
