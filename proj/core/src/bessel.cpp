#include "carleman/bessel.hpp"

#include <cmath>
#include <numbers>

#include "carleman/errors.hpp"

namespace carleman {

namespace {

constexpr double kMaxOrder = 30.0;

double ascending_series(double nu, double r) {
  const double h = 0.5 * r;
  const double h2 = h * h;
  double term = std::exp(nu * std::log(h) - std::lgamma(nu + 1.0));
  double sum = term;
  for (int m = 1; m < 500; ++m) {
    term *= -h2 / (m * (m + nu));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum) && m > h) break;
  }
  return sum;
}

// Hankel expansion with the terms truncated at their smallest magnitude.
double hankel_asymptotic(double nu, double r) {
  const double mu = 4.0 * nu * nu;
  double P = 0.0, Q = 0.0;
  double a = 1.0;  // a_k / r^k
  double last = 1e300;
  for (int k = 0; k < 200; ++k) {
    if (k > 0) a *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (k * 8.0 * r);
    const double mag = std::abs(a);
    if (mag > last) break;
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0)
      P += sign * a;
    else
      Q += sign * a;
    if (mag < 1e-17) break;
    last = mag;
  }
  const double chi = r - (0.5 * nu + 0.25) * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * r)) * (P * std::cos(chi) - Q * std::sin(chi));
}

double half_integer_upward(int steps, double r) {
  // J_{-1/2}, J_{1/2} closed forms, then J_{v+1} = (2v/r) J_v - J_{v-1}.
  const double c = std::sqrt(2.0 / (std::numbers::pi * r));
  double jm = c * std::cos(r);
  double j = c * std::sin(r);
  for (int i = 0; i < steps; ++i) {
    const double v = 0.5 + i;
    const double jn = 2.0 * v / r * j - jm;
    jm = j;
    j = jn;
  }
  return j;
}

double miller_integer(int nu, double r) {
  const int top = static_cast<int>(std::max<double>(nu, r)) + 30 + static_cast<int>(std::sqrt(40.0 * std::max<double>(nu, r)));
  const int start = top + (top % 2);
  double jp = 0.0, j = 1e-300, want = 0.0, norm = 0.0;
  for (int n = start; n > 0; --n) {
    const double jm = 2.0 * n / r * j - jp;
    jp = j;
    j = jm;  // now J_{n-1} up to scale
    if (n - 1 == nu) want = j;
    if ((n - 1) % 2 == 0 && n - 1 > 0) norm += 2.0 * j;
    if (std::abs(j) > 1e250) {
      j *= 1e-250;
      jp *= 1e-250;
      want *= 1e-250;
      norm *= 1e-250;
    }
  }
  norm += j;  // J_0
  return want / norm;
}

}  // namespace

double bessel_j(double nu, double r) {
  if (nu < 0 || r < 0 || !std::isfinite(r)) throw DomainError("bessel_j needs nu >= 0 and finite r >= 0");
  const double twice = 2.0 * nu;
  if (twice != std::round(twice) || nu > kMaxOrder) throw UnsupportedOrder("bessel_j order " + std::to_string(nu));
  if (r == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  const bool integer = nu == std::round(nu);
  if (r < std::max(8.0, nu)) return ascending_series(nu, r);
  if (!integer) return half_integer_upward(static_cast<int>(nu - 0.5), r);
  if (r >= std::max(25.0, 2.0 * nu * nu)) return hankel_asymptotic(nu, r);
  return miller_integer(static_cast<int>(nu), r);
}

double bessel_j_scaled(double nu, double r) {
  if (nu < 0 || r < 0) throw DomainError("bessel_j_scaled needs nu >= 0 and r >= 0");
  if (r >= std::max(8.0, nu)) return bessel_j(nu, r) * std::pow(r, -nu);
  const double twice = 2.0 * nu;
  if (twice != std::round(twice) || nu > kMaxOrder) throw UnsupportedOrder("bessel_j order " + std::to_string(nu));
  const double h2 = 0.25 * r * r;
  double term = std::exp(-nu * std::log(2.0) - std::lgamma(nu + 1.0));
  double sum = term;
  for (int m = 1; m < 500; ++m) {
    term *= -h2 / (m * (m + nu));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum) && m * m > h2) break;
  }
  return sum;
}

double sphere_area(int n) { return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n); }

double sphere_hat(int n, double r) {
  if (n < 2) throw DomainError("sphere_hat needs n >= 2");
  if (r < 0) throw DomainError("sphere_hat needs r >= 0");
  return std::pow(2.0 * std::numbers::pi, 0.5 * n) * bessel_j_scaled(0.5 * n - 1.0, r);
}

}  // namespace carleman
