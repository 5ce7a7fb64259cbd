#include "carleman/kelvin.hpp"

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <cmath>
#include <numbers>

#include "carleman/errors.hpp"
#include "carleman/grid.hpp"
#include "carleman/quadrature.hpp"

namespace carleman {

namespace {

constexpr double kPi = std::numbers::pi;

// (-Laplace)^s of a radial function on R^3 through the sine transform,
// given its radial Fourier transform F(rho).
double radial_frac_laplacian_3d(const std::function<double(double)>& F, double s, double R, double rho_max) {
  auto g = [&](double rho) {
    const double sr = R * rho < 1e-8 ? rho * (1.0 - (R * rho) * (R * rho) / 6.0) : std::sin(R * rho) / R;
    return std::pow(rho, 2 * s + 1) * F(rho) * sr;
  };
  std::vector<double> brk;
  for (double t = 1.0; t < rho_max; t += 1.0) brk.push_back(t);
  return integrate_panels(g, panel_edges(0.0, rho_max, brk), 1e-13, 1e-11) / (2 * kPi * kPi);
}

}  // namespace

RadialProfile RadialProfile::gaussian_annulus(double sigma) {
  if (!(sigma > 0 && 4.5 * sigma < 1)) throw DomainError("annulus width must satisfy 0 < 4.5 sigma < 1");
  RadialProfile p;
  p.d = 3;
  p.value = [sigma](double r) { return std::exp(-(r - 1) * (r - 1) / (2 * sigma * sigma)); };
  p.r_inner = 1 - 4.5 * sigma;
  p.r_outer = 1 + 4.5 * sigma;
  p.frac_laplacian = [sigma, u = p.value](double s, double R) {
    if (s == 1.0) {
      const double x = R - 1, s2 = sigma * sigma;
      const double up = -x / s2 * u(R), upp = (x * x / (s2 * s2) - 1 / s2) * u(R);
      return -(upp + 2 * up / R);
    }
    // Radial transform, extending the Gaussian to the whole line (tail below e^{-1/(2 sigma^2)}).
    auto F = [sigma](double rho) {
      const double c = 4 * kPi * std::sqrt(2 * kPi) * sigma * std::exp(-0.5 * sigma * sigma * rho * rho);
      if (rho < 1e-8) return c * (1 + sigma * sigma);
      return c * (std::sin(rho) + sigma * sigma * rho * std::cos(rho)) / rho;
    };
    const double rho_max = std::sqrt(2 * 40 * std::log(10.0)) / sigma;
    return radial_frac_laplacian_3d(F, s, R, rho_max);
  };
  return p;
}

double kelvin(const std::function<double(std::span<const double>)>& u, int d, double s, std::span<const double> x) {
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  if (r2 == 0.0) throw DomainError("Kelvin transform is undefined at the origin");
  std::vector<double> y(x.begin(), x.end());
  for (double& v : y) v /= r2;
  return std::pow(r2, 0.5 * (-d + 2 * s)) * u(y);
}

double kelvin(const RadialProfile& u, double s, double r) {
  if (r == 0.0) throw DomainError("Kelvin transform is undefined at the origin");
  return std::pow(r, -u.d + 2 * s) * u.value(1.0 / r);
}

PairingResult verify_kelvin(const RadialProfile& u, double s, const KelvinGrid& grid) {
  const int d = u.d;
  if (d != 3) throw DomainError("the Kelvin check is implemented for d = 3");
  if (!(s > 0 && s < 0.5 * d)) throw DomainError("Kelvin order must satisfy 0 < s < d/2");
  const double half = 0.5 * grid.period;
  const double a = 1.0 / u.r_outer, b = 1.0 / u.r_inner;
  if (!(u.r_inner > 0 && u.r_outer < half && b < half))
    throw DomainError("support annulus and its inversion must lie inside half the period");

  auto field = GridField::from_function(std::vector<GridAxis>(3, GridAxis{grid.n, grid.period, 0.0}), Domain::Space,
                                        [&](std::span<const double> x) -> cplx {
                                          const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
                                          if (r < a * 0.5) return 0.0;
                                          return kelvin(u, s, r);
                                        });
  field = field.to_frequency();
  std::vector<double> xi(3);
  for (std::size_t i = 0; i < field.size(); ++i) {
    field.frequencies(i, xi);
    field[i] *= std::pow(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2], s);
  }
  field = field.to_space();

  // Oracle profile on [1/b, 1/a], interpolated by a cubic B-spline.
  const int knots = 3001;
  const double lo = 1.0 / b, hi = 1.0 / a, step = (hi - lo) / (knots - 1);
  std::vector<double> prof(knots);
  for (int i = 0; i < knots; ++i) prof[i] = u.frac_laplacian(s, lo + step * i);
  boost::math::interpolators::cardinal_cubic_b_spline<double> spline(prof.begin(), prof.end(), lo, step);

  double num = 0.0, den = 0.0, lsq = 0.0;
  std::size_t nodes = 0;
  std::vector<double> x(3);
  for (std::size_t i = 0; i < field.size(); ++i) {
    field.coordinates(i, x);
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    if (r < a || r > b) continue;
    const double rhs = std::pow(r, -d - 2 * s) * spline(std::clamp(1.0 / r, lo, hi));
    const double lhs = field.physical_value(i).real();
    num += (lhs - rhs) * (lhs - rhs);
    den += rhs * rhs;
    lsq += lhs * lhs;
    ++nodes;
  }
  // Sides are reported as discrete L^2 norms; the errors refer to the pointwise difference.
  PairingResult res;
  res.lhs = std::sqrt(lsq);
  res.rhs = std::sqrt(den);
  res.abs_err = std::sqrt(num);
  res.rel_err = den > 0 ? std::sqrt(num / den) : 0.0;
  res.quadrature_nodes = nodes;
  return res;
}

}  // namespace carleman
