#pragma once
#include <optional>
#include <string>
#include <vector>

#include "carleman/grid.hpp"
#include "carleman/regions.hpp"

namespace carleman {

enum class ExponentKind {
  MeUpper,     // d x - y - (d - 2 + 2k)/2
  MeKnapp,     // (d + 2)/2 (x - y) - k
  TildeUpper,  // (d - 1) x - (d - 2 + 2k)/2
  TildeLower,  // -(d - 1) y + d/2 - k
  L2Ring,      // 1/2 - k, in the variable 2^j eps
  TildeKnapp,  // d/2 (x - y) - k
};

std::string to_string(ExponentKind kind);
ExponentKind parse_exponent_kind(const std::string& text);

Rational theoretical_exponent_exact(ExponentKind kind, int d, int k, const ExponentPoint& P);
double theoretical_exponent(ExponentKind kind, int d, int k, const ExponentPoint& P);

enum class EstimateMethod { ExplicitWitness, PowerMethod };

struct NormEstimate {
  double value = 0.0;
  double p = 2.0, q = 2.0;
  std::string witness;
  EstimateMethod method = EstimateMethod::ExplicitWitness;
  std::vector<double> history;  // power method: ratio after each application
  std::string warning;
  std::optional<GridField> witness_field;
};

// ||T f||_q / ||f||_p for the discrete operator with the given symbol table.
NormEstimate certified_lower_bound(const SymbolTable& table, const GridField& f, double p, double q,
                                   std::string witness = "explicit");
NormEstimate certified_lower_bound(const SymbolSpec& spec, const GridField& f, double p, double q,
                                   std::string witness = "explicit");

// Normalised |h|^{r-1} h/|h| with sgn(0) = 0 and unit L^r' norm of the dual pairing.
GridField dualize(const GridField& h, double r);

struct PowerOptions {
  int max_iter = 30;
  double tol = 1e-6;      // relative change of the ratio between iterations
  bool keep_witness = true;
};

NormEstimate power_method(const SymbolTable& table, const SymbolTable& adjoint, double p, double q,
                          const GridField& init, const PowerOptions& opt = {}, std::string witness = "init");
NormEstimate power_method(const SymbolSpec& spec, double p, double q, const GridField& init,
                          const PowerOptions& opt = {});

// Complex Gaussian noise on the space lattice, reproducible from (seed, stream).
GridField random_field(const std::vector<GridAxis>& axes, std::uint64_t seed, std::uint64_t stream);

// Runs random restarts plus the supplied extra inits and keeps the best estimate.
NormEstimate power_method_restarts(const SymbolTable& table, const SymbolTable& adjoint, double p, double q,
                                   const std::vector<GridAxis>& axes, int random_restarts, std::uint64_t seed,
                                   const std::vector<std::pair<std::string, GridField>>& extra_inits,
                                   const PowerOptions& opt = {});

struct ScalingFit {
  std::vector<std::pair<double, double>> pairs;  // (eps, value)
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;  // in natural-log units
  std::optional<double> theory;
  std::optional<ExponentKind> kind;

  bool within(double tolerance) const { return theory && std::abs(slope - *theory) <= tolerance; }
};

ScalingFit fit_loglog(std::vector<std::pair<double, double>> pairs);
ScalingFit fit_scaling(std::vector<std::pair<double, double>> pairs, std::optional<ExponentKind> kind = std::nullopt,
                       int d = 3, int k = 1, std::optional<ExponentPoint> P = std::nullopt);

}  // namespace carleman
