#include "carleman/lower_bound.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <numbers>

#include "carleman/bessel.hpp"
#include "carleman/cutoffs.hpp"
#include "carleman/errors.hpp"
#include "carleman/quadrature.hpp"

namespace carleman {

namespace {

constexpr double kPi = std::numbers::pi;

double sigma_constant(int d) { return std::pow(2.0 * kPi, 0.5 * (d - 1)); }

// Panels graded toward the resonance rho^2 = 1 - eps^2 tau^2 and split at the plateau edges.
std::vector<double> rho_edges(double eps, double tau, double delta0) {
  const double r0 = std::sqrt(std::max(0.0, 1.0 - eps * eps * tau * tau));
  std::vector<double> pts{r0, 1.0 - delta0, 1.0 + delta0};
  for (double m : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
    pts.push_back(r0 - m * eps);
    pts.push_back(r0 + m * eps);
  }
  return panel_edges(1.0 - 2.0 * delta0, 1.0 + 2.0 * delta0, std::move(pts));
}

template <class G>
cplx rho_integral(G&& g, double eps, double tau, double delta0, double abs_tol) {
  return integrate_panels(g, rho_edges(eps, tau, delta0), abs_tol, 1e-11);
}

// int e^{i t tau} phi(tau) inner(tau) d tau over the three smoothness panels of phi.
template <class Inner>
cplx tau_integral(const Phi5Spec& spec, double t, Inner&& inner) {
  const double d0 = spec.delta0;
  const double edges[] = {1 - 2 * d0, 1 - d0, 1 + d0, 1 + 2 * d0};
  cplx total{0.0, 0.0};
  for (int p = 0; p < 3; ++p)
    total += gauss64([&](double tau) { return std::polar(spec.phi(tau), t * tau) * inner(tau); }, edges[p], edges[p + 1]);
  return total;
}

cplx denominator(double rho, double eps, double tau) { return {rho * rho - 1.0 + eps * eps * tau * tau, 2.0 * eps * tau}; }

cplx ipow(cplx z, int k) {
  cplx r{1.0, 0.0};
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

}  // namespace

double Phi5Spec::plateau(double u) const { return Cutoff::psi0()(u / delta0); }

double Phi5Spec::phi(double rho) const {
  const double p = plateau(rho - 1.0);
  return p == 0.0 ? 0.0 : std::pow(rho, -0.5 * (d - 2 * k)) * p;
}

Jet Phi5Spec::phi_jet(double rho, std::size_t order) const {
  const Jet p = Cutoff::psi0().jet((rho - 1.0) / delta0, order).scaled(1.0 / delta0);
  return pow(Jet::variable(order, rho), -0.5 * (d - 2 * k)) * p;
}

std::vector<double> Phi5Spec::phi_l(double rho) const {
  const std::size_t order = static_cast<std::size_t>(k - 1);
  const Jet r = Jet::variable(order, rho);
  std::vector<Jet> a{sigma_constant(d) * pow(r, d - 2.0) * phi_jet(rho, order)};
  for (int step = 1; step < k; ++step) {
    std::vector<Jet> next;
    for (int l = 0; l <= step; ++l) {
      Jet term = l < step ? (a[l] / r).differentiated(1) : Jet(a[l - 1].order() - 1, 0.0);
      if (l > 0) term -= a[l - 1];
      next.push_back(term);
    }
    a = std::move(next);
  }
  std::vector<double> out;
  for (const auto& j : a) out.push_back(j[0]);
  return out;
}

double b_integral(double u) { return std::isinf(u) ? kPi : 2.0 * std::atan(u); }

double choose_lambda() {
  auto g = [](double lam) { return b_integral(lam / 4) - 16.0 * (b_integral(INFINITY) - b_integral(lam / 4)); };
  auto [lo, hi] = boost::math::tools::bisect(g, 1.0, 1e4, boost::math::tools::eps_tolerance<double>(50));
  return hi;
}

void LowerBoundParams::resolve() {
  if (d < 3 || k < 1) throw DomainError("lower bound needs d >= 3 and k >= 1");
  if (!(eps > 0)) throw DomainError("eps must be positive");
  if (!(delta0 > 0 && delta0 < 0.25)) throw DomainError("delta0 must lie in (0, 1/4)");
  if (lambda == 0.0) lambda = choose_lambda();
  if (b_integral(lambda / 4) < 16.0 * (kPi - b_integral(lambda / 4)) * (1 - 1e-12))
    throw DomainError("lambda violates the tail-split inequality");
  if (mu == 0.0) mu = std::ldexp(1.0, -7) / lambda;
  if (lambda * mu > std::ldexp(1.0, -7) * (1 + 1e-12)) throw DomainError("lambda mu must not exceed 2^-7");
  if (!(c1 < c2)) throw DomainError("c1 must be below c2");
  if (!(c0 > 0)) throw DomainError("c0 must be positive");
  if (samples_per_window < 1) throw DomainError("samples_per_window must be positive");
}

double I_integral(IWhich which, double tau, double y, double eps, const std::function<double(double)>& varphi,
                  double delta0, double abs_tol) {
  const bool odd_num = which == IWhich::I1 || which == IWhich::I3 || which == IWhich::Tilde1;
  auto f = [&](double rho) {
    const double a = rho * rho - 1.0 + eps * eps * tau * tau;
    const double b = 2.0 * eps * tau;
    const double num = odd_num ? b : a;
    double osc = 1.0;
    if (which == IWhich::I1 || which == IWhich::I2) osc = std::cos((rho - 1.0) * y);
    if (which == IWhich::I3 || which == IWhich::I4) osc = std::sin((rho - 1.0) * y);
    return num / (a * a + b * b) * varphi(rho) * osc;
  };
  return integrate_panels(f, rho_edges(eps, tau, delta0), abs_tol, 1e-12);
}

double I_integral(IWhich which, double tau, double y, double eps, const Phi5Spec& spec) {
  return I_integral(which, tau, y, eps, [&](double r) { return spec.varphi(r); }, spec.delta0);
}

cplx mtilde_radial(int d, int k, double eps, const Phi5Spec& spec, double y, double t) {
  if (y < 0 || y > 1e4) throw DomainError("mtilde_radial needs 0 <= |y| <= 1e4");
  const double cs = sigma_constant(d);
  const double nu = 0.5 * (d - 3);
  const double tol = 1e-12 * std::pow(eps, 1.0 - k);
  const cplx inner_scale = tau_integral(spec, t, [&](double tau) {
    auto g = [&](double rho) -> cplx {
      const double ph = spec.phi(rho);
      if (ph == 0.0) return {0.0, 0.0};
      return std::pow(rho, d - 2.0) * ph * cs * bessel_j_scaled(nu, rho * y) / ipow(denominator(rho, eps, tau), k);
    };
    return rho_integral(g, eps, tau, spec.delta0, tol);
  });
  return inner_scale / std::pow(2.0 * kPi, d);
}

cplx JDecomposition::total() const {
  cplx s{0.0, 0.0};
  for (const auto& j : J) s += j;
  return prefactor * s;
}

JDecomposition J_decomposition(int d, int k, double eps, const Phi5Spec& spec, double y, double t) {
  if (y < 0 || y > 1e4) throw DomainError("J_decomposition needs 0 <= |y| <= 1e4");
  const double nu = 0.5 * (d - 3);
  const double tol = 1e-12 / eps;
  JDecomposition out;
  out.prefactor = std::pow(2.0 * kPi, -d) / (std::pow(2.0, k - 1) * factorial(k - 1));
  for (int l = 0; l < k; ++l) {
    const cplx v = tau_integral(spec, t, [&](double tau) {
      auto g = [&](double rho) -> cplx {
        if (spec.phi(rho) == 0.0) return {0.0, 0.0};
        const double a = spec.phi_l(rho)[static_cast<std::size_t>(l)];
        return a * bessel_j_scaled(nu + l, rho * y) / denominator(rho, eps, tau);
      };
      return rho_integral(g, eps, tau, spec.delta0, tol);
    });
    out.J.push_back(std::pow(y, 2.0 * l) * v);
  }
  // The asymptotic split of the top term is meaningful only where rho|y| >= 1.
  const double nan = std::numeric_limits<double>::quiet_NaN();
  out.J1 = out.J2 = out.J3 = out.J_top_from_pieces = {nan, nan};
  if (y >= 1.0 / spec.support_lo()) {
    const double al = alpha_dk(d, k);
    const double top = nu + k - 1;
    auto piece = [&](auto weight) {
      return tau_integral(spec, t, [&](double tau) {
        auto g = [&](double rho) -> cplx {
          if (spec.varphi(rho) == 0.0) return {0.0, 0.0};
          return weight(rho) / denominator(rho, eps, tau);
        };
        return rho_integral(g, eps, tau, spec.delta0, tol);
      });
    };
    const double ypow = std::pow(y, 0.5 * (2 * k - d));
    out.J1 = ypow * std::cos(y - al) * piece([&](double rho) { return spec.varphi(rho) * std::cos((rho - 1.0) * y); });
    out.J2 = ypow * std::sin(y - al) * piece([&](double rho) { return spec.varphi(rho) * std::sin((rho - 1.0) * y); });
    out.J3 = std::pow(y, 0.5 * (2 * k + 1 - d)) * piece([&](double rho) {
               const double r = rho * y;
               const double R = bessel_j(top, r) - std::sqrt(2.0 / (kPi * r)) * std::cos(r - al);
               return std::pow(rho, 0.5 * (d - 2 * k + 1)) * spec.phi(rho) * R;
             });
    const double c_top = (k % 2 == 1 ? 1.0 : -1.0) * sigma_constant(d);
    out.J_top_from_pieces = c_top * (std::sqrt(2.0 / kPi) * (out.J1 - out.J2) + out.J3);
  }
  return out;
}

double alpha_dk(int d, int k) { return 0.25 * kPi * (d + 2 * k - 4); }

FrakSSample frak_S_sample(const LowerBoundParams& params) {
  FrakSSample out;
  if (!(params.c1 < params.c2)) {
    out.empty_reason = "c1 must be below c2";
    return out;
  }
  const double lo = params.c1 / params.eps, hi = params.c2 / params.eps;
  const double al = alpha_dk(params.d, params.k);
  const double c0 = params.c0;
  const long m0 = static_cast<long>(std::ceil((lo - al - c0) / (2 * kPi)));
  const long m1 = static_cast<long>(std::floor((hi - al + c0) / (2 * kPi)));
  const int n = params.samples_per_window;
  for (long m = m0; m <= m1; ++m) {
    for (int i = 0; i < n; ++i) {
      const double s = n == 1 ? 0.0 : -c0 + 2.0 * c0 * i / (n - 1);
      const double v = al + 2 * kPi * static_cast<double>(m) + s;
      if (v >= lo && v <= hi && v >= 0) out.values.push_back(v);
    }
  }
  if (out.values.empty()) out.empty_reason = "no phase window meets [c1/eps, c2/eps]; widen c0 or the annulus";
  return out;
}

double calibrate_t_tilde(const LowerBoundParams& params, const Phi5Spec& spec, const std::vector<double>& ys,
                         const std::vector<double>& t_grid) {
  auto min_over = [&](double t) {
    double m = INFINITY;
    for (double y : ys) m = std::min(m, std::abs(mtilde_radial(params.d, params.k, params.eps, spec, y, t)));
    return m;
  };
  const double base = min_over(0.0);
  double best = 0.0;
  for (double t : t_grid) {
    const double r = min_over(t) / base;
    if (r < 0.5 || r > 2.0) break;
    best = t;
  }
  return best;
}

}  // namespace carleman
