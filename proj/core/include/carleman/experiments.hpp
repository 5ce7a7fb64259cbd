#pragma once
#include <string>
#include <vector>

#include "carleman/knapp.hpp"
#include "carleman/lower_bound.hpp"
#include "carleman/normest.hpp"

namespace carleman {

// Certified Knapp lower bounds for the rescaled piece or the unscaled piece.
enum class KnappOperator { Rescaled, Unscaled };

struct KnappScalingConfig {
  int d = 3;
  int k = 1;
  ExponentPoint P{Rational(3, 4), Rational(1, 4)};
  std::vector<double> eps{0.125, 0.0625, 0.03125, 0.015625};
  double delta0 = 1.0 / 32;
  double eps0 = 1.0 / 32;
  KnappGridParams grid{};
  bool imaginary_part = false;
};

struct KnappScalingResult {
  std::vector<NormEstimate> estimates;
  ScalingFit fit;
};

KnappScalingResult knapp_scaling(KnappOperator op, const KnappScalingConfig& cfg);

// Power-method bounds for the ring-localised operators at fixed eps, one per j.
struct RingScalingConfig {
  int d = 3;
  int k = 1;
  double eps = 1.0 / 64;
  std::vector<int> js{0, 1, 2, 3};
  double p = 2.0, q = 6.0;
  // Sector window on (eta_1, eta_2, tau) around a patch of the unit circle.
  int n_eta = 256, n_tau = 32;
  double eta_step = 0.0019, tau_step = 1.0 / 16;
  double eta2_centre = 0.99, tau_centre = 1.25;
  int random_restarts = 2;
  int iterations = 25;
  std::uint64_t seed = 1;
};

struct RingScalingResult {
  std::vector<NormEstimate> estimates;
  // Closed-form L^2 -> L^inf norm (2 pi)^{-d/2} ||M||_2 of each operator, as a reference.
  std::vector<double> l2_reference;
  ScalingFit fit;  // in the variable 2^j eps
};

std::vector<GridAxis> ring_axes(const RingScalingConfig& cfg);
RingScalingResult ring_scaling(const RingScalingConfig& cfg);
double ring_l2_reference(int d, int k, double eps, int j);

struct LowerBoundRow {
  double eps = 0.0;
  double y = 0.0;
  double t = 0.0;
  double modulus = 0.0;     // |m f(y, t)|
  double normalised = 0.0;  // eps^{k - d/2} |m f|
  bool in_S = false;
};

struct LowerBoundSweep {
  std::vector<LowerBoundRow> rows;
  std::vector<std::pair<double, double>> minima;  // (eps, min over S of |m f|)
  double band_ratio = 0.0;                        // max / min of the normalised minima
  ScalingFit fit;
};

LowerBoundSweep lower_bound_sweep(int d, int k, const std::vector<double>& eps, double t = 0.0,
                                  const LowerBoundParams& base = {});

struct ResonanceConstants {
  double eps = 0.0;
  double tilde2 = 0.0;       // Tilde I_2(1; eps)
  double I1_min_annulus = 0.0;  // min I_1 over tau and |y| in [mu/(4 eps), mu/(2 eps)]
  double I1_min_window = 0.0;   // min I_1 over tau and |y| in [c1/eps, c2/eps]
  double I2_max = 0.0;          // max |I_2| over tau and |y| in {0} u [0.1, 4/eps]
  double I4_max = 0.0;          // max |I_4| over tau and |y| in [c1/eps, c2/eps]
};

std::vector<ResonanceConstants> resonance_constants(const std::vector<double>& eps, const LowerBoundParams& base = {});

// max/min of a positive sequence; infinity when some value is not positive.
double drift(const std::vector<double>& values);

}  // namespace carleman
