#include "carleman/test_function.hpp"

#include <cmath>
#include <sstream>

#include "carleman/errors.hpp"
#include "carleman/rng.hpp"

namespace carleman {

namespace {

double norm(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

Jet int_power(const Jet& t, int p) {
  Jet r = Jet::constant(t.order(), 1.0);
  for (int i = 0; i < p; ++i) r = r * t;
  return r;
}

}  // namespace

TestFunction TestFunction::poly_gauss(int n, std::vector<Monomial> poly, double a) {
  for (const auto& m : poly)
    if (static_cast<int>(m.powers.size()) != n) throw DomainError("monomial arity differs from dimension");
  TestFunction f;
  f.n_ = n;
  f.family_ = TestFamily::PolyGauss;
  std::ostringstream os;
  os << "polygauss(n=" << n << ",a=" << a << ",terms=" << poly.size() << ")";
  f.name_ = os.str();
  f.value_ = [poly, a](std::span<const double> x) {
    double p = 0.0, r2 = 0.0;
    for (double v : x) r2 += v * v;
    for (const auto& m : poly) {
      double t = m.coeff;
      for (std::size_t i = 0; i < x.size(); ++i) t *= std::pow(x[i], m.powers[i]);
      p += t;
    }
    return p * std::exp(-a * r2);
  };
  f.ray_ = [poly, a](std::span<const double> x, std::size_t order) {
    const double t0 = norm(x);
    if (t0 == 0.0) throw DomainError("ray jet needs theta != 0");
    const Jet t = Jet::variable(order, t0);
    Jet p(order, 0.0);
    for (const auto& m : poly) {
      double c = m.coeff;
      int deg = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        c *= std::pow(x[i] / t0, m.powers[i]);
        deg += m.powers[i];
      }
      p += c * int_power(t, deg);
    }
    return p * exp(-a * (t * t));
  };
  return f;
}

TestFunction TestFunction::radial_power(int n, double a) {
  TestFunction f;
  f.n_ = n;
  f.family_ = TestFamily::RadialPower;
  f.name_ = "radial_power(a=" + std::to_string(a) + ")";
  f.value_ = [a](std::span<const double> x) { return std::pow(norm(x), a); };
  f.ray_ = [a](std::span<const double> x, std::size_t order) {
    const double t0 = norm(x);
    if (t0 == 0.0) throw DomainError("radial power is singular at the origin");
    return pow(Jet::variable(order, t0), a);
  };
  return f;
}

TestFunction TestFunction::custom(int n, std::string name, ValueFn value, RayJetFn ray_jet) {
  TestFunction f;
  f.n_ = n;
  f.family_ = TestFamily::Custom;
  f.name_ = std::move(name);
  f.value_ = std::move(value);
  f.ray_ = std::move(ray_jet);
  return f;
}

TestFunction TestFunction::random_poly_gauss(int n, CounterRng& rng) {
  std::vector<Monomial> poly;
  poly.push_back({1.0 + rng.uniform(), std::vector<int>(n, 0)});
  for (int i = 0; i < n; ++i) {
    std::vector<int> lin(n, 0), quad(n, 0);
    lin[i] = 1;
    quad[i] = 2;
    poly.push_back({rng.uniform() - 0.5, lin});
    poly.push_back({rng.uniform() - 0.5, quad});
  }
  if (n >= 2) {
    std::vector<int> mixed(n, 0);
    mixed[0] = mixed[1] = 1;
    poly.push_back({rng.uniform() - 0.5, mixed});
  }
  return poly_gauss(n, std::move(poly), 0.5 + rng.uniform());
}

}  // namespace carleman
