#pragma once
#include <functional>
#include <span>

#include "carleman/identities.hpp"

namespace carleman {

// Radial function on R^d with an effective support annulus and a closed-form or
// quadrature value of (-Laplace)^s at radius R.
struct RadialProfile {
  int d = 3;
  std::function<double(double)> value;
  double r_inner = 0.0;
  double r_outer = 0.0;
  std::function<double(double s, double R)> frac_laplacian;

  // exp(-(r-1)^2 / (2 sigma^2)) on R^3, effective support 1 -+ 4.5 sigma.
  static RadialProfile gaussian_annulus(double sigma);
};

// T_s u(x) = |x|^{-d+2s} u(x / |x|^2).
double kelvin(const std::function<double(std::span<const double>)>& u, int d, double s, std::span<const double> x);
double kelvin(const RadialProfile& u, double s, double r);

struct KelvinGrid {
  int n = 128;
  double period = 4.0;
};

// Compares (-Laplace)^s T_s u, applied spectrally on the grid, with
// |x|^{-d-2s} ((-Laplace)^s u)(x / |x|^2) in relative L^2 over the inverted annulus.
PairingResult verify_kelvin(const RadialProfile& u, double s, const KelvinGrid& grid);

}  // namespace carleman
