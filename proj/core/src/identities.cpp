#include "carleman/identities.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "carleman/errors.hpp"
#include "carleman/quadrature.hpp"

namespace carleman {

PairingResult PairingResult::make(cplx lhs, cplx rhs, std::size_t nodes) {
  PairingResult r{lhs, rhs, std::abs(lhs - rhs), 0.0, nodes};
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  r.rel_err = scale > 0 ? r.abs_err / scale : 0.0;
  return r;
}

SphereRule::SphereRule(int n, int polar_nodes, int azimuth_nodes) : n_(n) {
  if (n < 2) throw DomainError("sphere rule needs n >= 2");
  if (std::pow(double(polar_nodes), n - 2) * azimuth_nodes > 2e7)
    throw DomainError("sphere rule would exceed 2e7 nodes; lower the node counts");
  // Start from the circle and add one polar angle per dimension.
  std::vector<std::vector<double>> pts;
  std::vector<double> w;
  for (int j = 0; j < azimuth_nodes; ++j) {
    const double a = 2 * std::numbers::pi * j / azimuth_nodes;
    pts.push_back({std::cos(a), std::sin(a)});
    w.push_back(2 * std::numbers::pi / azimuth_nodes);
  }
  std::vector<double> x, gw;
  gauss_legendre_rule(polar_nodes, x, gw);
  for (int m = 3; m <= n; ++m) {
    std::vector<std::vector<double>> np;
    std::vector<double> nw;
    for (int i = 0; i < polar_nodes; ++i) {
      const double th = 0.5 * std::numbers::pi * (x[i] + 1.0);
      const double wt = 0.5 * std::numbers::pi * gw[i] * std::pow(std::sin(th), m - 2);
      for (std::size_t q = 0; q < pts.size(); ++q) {
        std::vector<double> p{std::cos(th)};
        for (double c : pts[q]) p.push_back(std::sin(th) * c);
        np.push_back(std::move(p));
        nw.push_back(wt * w[q]);
      }
    }
    pts = std::move(np);
    w = std::move(nw);
  }
  for (const auto& p : pts) points_.insert(points_.end(), p.begin(), p.end());
  weights_ = std::move(w);
}

double SphereRule::integrate(const std::function<double(std::span<const double>)>& f) const {
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) s += weights_[i] * f(point(i));
  return s;
}

Jet L_apply_ray(const Jet& u, double t0, int n, int m) {
  Jet v = u;
  for (int i = 0; i < m; ++i) {
    if (v.order() == 0) throw DomainError("ray jet has too few orders for L^m");
    const Jet t = Jet::variable(v.order() - 1, t0);
    v = ((n - 2.0) * v + t * v.differentiated(1)) / (2.0 * (t * t));
  }
  return v;
}

double L_apply(const TestFunction& phi, int m, std::span<const double> theta) {
  if (m < 0) throw DomainError("L power must be nonnegative");
  double t0 = 0.0;
  for (double v : theta) t0 += v * v;
  t0 = std::sqrt(t0);
  if (t0 == 0.0) throw DomainError("L is singular at theta = 0");
  return L_apply_ray(phi.ray_jet(theta, static_cast<std::size_t>(m)), t0, phi.dim(), m)[0];
}

std::vector<double> sphere_moments(const TestFunction& phi, const SphereRule& rule, double r, int max_power) {
  const int n = rule.dim();
  std::vector<double> out(static_cast<std::size_t>(max_power) + 1, 0.0);
  std::vector<double> theta(n);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto w = rule.point(i);
    for (int a = 0; a < n; ++a) theta[a] = r * w[a];
    Jet u = phi.ray_jet(theta, static_cast<std::size_t>(max_power));
    for (int j = 0; j <= max_power; ++j) {
      out[j] += rule.weight(i) * u[0];
      if (j < max_power) u = L_apply_ray(u, r, n, 1);
    }
  }
  for (double& v : out) v *= std::pow(r, n - 1);
  return out;
}

namespace {

double central_difference(const std::function<double(double)>& G, int m, double h) {
  if (m == 0) return G(0.0);
  double s = 0.0;
  for (int j = 0; j <= m; ++j) s += ((j % 2) ? -1.0 : 1.0) * binomial(m, j) * G((0.5 * m - j) * h);
  return s / std::pow(h, m);
}

}  // namespace

double pair_pullback(int k, double rho, const TestFunction& phi, int n, double h) {
  if (k < 1) throw DomainError("pullback order must be positive");
  if (!(rho > 0)) throw DomainError("pullback needs rho > 0");
  if (phi.dim() != n) throw DomainError("test function dimension differs from n");
  const SphereRule rule(n);
  auto G = [&](double u) {
    const double r = std::sqrt(rho * rho - u);
    return sphere_moments(phi, rule, r, 0)[0] / (2.0 * r);
  };
  const int m = k - 1;
  const double coarse = central_difference(G, m, h);
  const double fine = central_difference(G, m, 0.5 * h);
  const double d = m == 0 ? coarse : (4.0 * fine - coarse) / 3.0;
  return (m % 2 ? -1.0 : 1.0) * d;
}

double pair_pullback_sampling(double rho, const TestFunction& phi, std::size_t points) {
  if (phi.dim() != 3) throw DomainError("sampling oracle is implemented on S^2");
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  double s = 0.0;
  double theta[3];
  for (std::size_t i = 0; i < points; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / static_cast<double>(points);
    const double r = std::sqrt(1.0 - z * z);
    const double a = golden * static_cast<double>(i);
    theta[0] = rho * r * std::cos(a);
    theta[1] = rho * r * std::sin(a);
    theta[2] = rho * z;
    s += phi(std::span<const double>(theta, 3));
  }
  const double sphere_integral = 4.0 * std::numbers::pi * s / static_cast<double>(points);
  return rho * rho * sphere_integral / (2.0 * rho);
}

PairingResult verify_dist_identity(int k, double rho, const TestFunction& phi, int n) {
  const double lhs = pair_pullback(k, rho, phi, n);
  const SphereRule rule(n);
  const double rhs = sphere_moments(phi, rule, rho, k - 1)[static_cast<std::size_t>(k - 1)] / (2.0 * rho);
  const std::size_t evals = rule.size() * (k == 1 ? 1 : 2 * static_cast<std::size_t>(k) + 1);
  return PairingResult::make(lhs, rhs, evals);
}

namespace {

// Pairings over R^{d-1} for one setup. The sphere moments of h are smooth in r, so they
// are tabulated once at Chebyshev points and interpolated; only the multiplier is stiff.
class CounterEvaluator {
 public:
  static constexpr int kChebyshev = 40;

  CounterEvaluator(const CounterSetup& s, const TestFunction& h, int max_L) : s_(s) {
    if (h.dim() != s.d - 1) throw DomainError("h must live on R^{d-1}");
    if (!(s.delta > 0 && s.delta < 0.5)) throw DomainError("delta must lie in (0, 1/2)");
    lo_ = std::sqrt(1.0 - 2.0 * s.delta);
    hi_ = std::sqrt(1.0 + 2.0 * s.delta);
    const SphereRule rule(s.d - 1, 24, 48);
    table_.resize(static_cast<std::size_t>(max_L) + 1, std::vector<double>(kChebyshev + 1));
    for (int j = 0; j <= kChebyshev; ++j) {
      const double r = node(j);
      const auto m = sphere_moments(h, rule, r, max_L);
      for (int p = 0; p <= max_L; ++p) table_[p][j] = m[p];
    }
    nodes_ = rule.size() * (kChebyshev + 1);
  }

  cplx pairing(int j, int zd, int p) {
    const auto key = std::make_tuple(j, zd, p);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const Cutoff z = s_.zeta.derivative(static_cast<std::size_t>(zd));
    const double ps = Cutoff::psi()(s_.tau);
    const double e = s_.eps, tau = s_.tau, del = s_.delta;
    auto f = [&](double r) -> cplx {
      const double zv = z((1.0 - r * r) / del);
      if (zv == 0.0) return {0.0, 0.0};
      cplx den{r * r - 1.0 + e * e * tau * tau, 2.0 * e * tau};
      cplx v = zv * ps;
      for (int i = 0; i < j; ++i) v /= den;
      return v * interpolate(p, r);
    };
    std::vector<double> brk;
    for (double c : {-1.0, -0.5, 0.5, 1.0}) brk.push_back(std::sqrt(1.0 - c * del));
    const double r0 = std::sqrt(std::max(0.0, 1.0 - e * e * tau * tau));
    brk.push_back(r0);
    for (double m : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
      brk.push_back(r0 - m * e);
      brk.push_back(r0 + m * e);
    }
    const cplx v = ps == 0.0 ? cplx{0.0, 0.0} : integrate_panels(f, panel_edges(lo_, hi_, brk), 1e-14, 1e-12);
    cache_[key] = v;
    return v;
  }

  std::size_t nodes() const { return nodes_; }

 private:
  double node(int j) const {
    return 0.5 * (lo_ + hi_) + 0.5 * (hi_ - lo_) * std::cos(std::numbers::pi * j / kChebyshev);
  }

  // Second-kind barycentric formula on the Chebyshev extrema.
  double interpolate(int p, double r) const {
    double num = 0.0, den = 0.0;
    for (int j = 0; j <= kChebyshev; ++j) {
      const double diff = r - node(j);
      if (diff == 0.0) return table_[p][j];
      double w = (j % 2) ? -1.0 : 1.0;
      if (j == 0 || j == kChebyshev) w *= 0.5;
      num += w * table_[p][j] / diff;
      den += w / diff;
    }
    return num / den;
  }

  CounterSetup s_;
  double lo_ = 0.0, hi_ = 0.0;
  std::vector<std::vector<double>> table_;
  std::map<std::tuple<int, int, int>, cplx> cache_;
  std::size_t nodes_ = 0;
};

}  // namespace

cplx counter_pairing(const CounterSetup& s, int j, int zeta_derivative, int L_power, const TestFunction& h) {
  CounterEvaluator ev(s, h, L_power);
  return ev.pairing(j, zeta_derivative, L_power);
}

namespace {

PairingResult counter_identity(CounterEvaluator& ev, CounterKind kind, const CounterSetup& s) {
  const int k = s.k;
  cplx lhs{0.0, 0.0}, rhs{0.0, 0.0};
  if (kind == CounterKind::Induc) {
    lhs = ev.pairing(k, 0, 0);
    for (int l = 0; l < k; ++l)
      rhs += ((l % 2) ? -1.0 : 1.0) / (std::pow(s.delta, l) * factorial(k - 1 - l) * factorial(l)) *
             ev.pairing(1, l, k - 1 - l);
  } else {
    lhs = ev.pairing(1, 0, k - 1);
    for (int l = 0; l < k; ++l) rhs += factorial(k - 1) / (std::pow(s.delta, l) * factorial(l)) * ev.pairing(k - l, l, 0);
  }
  return PairingResult::make(lhs, rhs, ev.nodes());
}

PairingResult counter_round_trip(CounterEvaluator& ev, const CounterSetup& s) {
  const int k = s.k;
  const cplx lhs = ev.pairing(k, 0, 0);
  cplx rhs{0.0, 0.0};
  for (int l = 0; l < k; ++l) {
    // <m^1[zeta^{(l)}], L^{k-1-l} h> rewritten by rev with order k - l.
    const int kk = k - l;
    cplx expanded{0.0, 0.0};
    for (int q = 0; q < kk; ++q)
      expanded += factorial(kk - 1) / (std::pow(s.delta, q) * factorial(q)) * ev.pairing(kk - q, l + q, 0);
    rhs += ((l % 2) ? -1.0 : 1.0) / (std::pow(s.delta, l) * factorial(k - 1 - l) * factorial(l)) * expanded;
  }
  return PairingResult::make(lhs, rhs, ev.nodes());
}

}  // namespace

PairingResult verify_counter_identities(CounterKind kind, const CounterSetup& s, const TestFunction& h) {
  CounterEvaluator ev(s, h, s.k - 1);
  return counter_identity(ev, kind, s);
}

PairingResult verify_counter_round_trip(const CounterSetup& s, const TestFunction& h) {
  CounterEvaluator ev(s, h, s.k - 1);
  return counter_round_trip(ev, s);
}

CounterSuiteResult verify_counter_suite(const CounterSetup& s, const TestFunction& h) {
  CounterEvaluator ev(s, h, s.k - 1);
  return {counter_identity(ev, CounterKind::Induc, s), counter_identity(ev, CounterKind::Rev, s),
          counter_round_trip(ev, s)};
}

}  // namespace carleman
