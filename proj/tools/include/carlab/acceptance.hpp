#pragma once
#include <functional>
#include <string>
#include <vector>

#include "carlab/report.hpp"

namespace carlab {

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  int threads = 1;
  // Overrides the eps list of the Knapp suite; used to exercise the octave guard.
  std::vector<double> knapp_eps;
};

struct Suite {
  std::string id;
  std::string title;
  double budget_seconds;
  std::function<void(Verdict&, const AcceptanceOptions&)> body;
};

const std::vector<Suite>& acceptance_suites();

// Runs one suite; module errors turn into a failing verdict naming the error.
Verdict run_suite(const Suite& s, const AcceptanceOptions& opt);
// "all" or a comma-separated list of ids, in declaration order.
RunReport run_acceptance(const std::string& selection, const AcceptanceOptions& opt, const json& config_echo);

}  // namespace carlab
