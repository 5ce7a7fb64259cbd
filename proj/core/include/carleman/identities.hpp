#pragma once
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "carleman/cutoffs.hpp"
#include "carleman/test_function.hpp"

namespace carleman {

using cplx = std::complex<double>;

struct PairingResult {
  cplx lhs{0.0, 0.0};
  cplx rhs{0.0, 0.0};
  double abs_err = 0.0;
  double rel_err = 0.0;
  std::size_t quadrature_nodes = 0;

  static PairingResult make(cplx lhs, cplx rhs, std::size_t nodes);
};

// Tensor Gauss-Legendre (polar angles, weight sin^{n-2}) times trapezoid (last angle) on S^{n-1}.
class SphereRule {
 public:
  explicit SphereRule(int n, int polar_nodes = 32, int azimuth_nodes = 64);
  int dim() const { return n_; }
  std::size_t size() const { return weights_.size(); }
  std::span<const double> point(std::size_t i) const { return {points_.data() + i * n_, static_cast<std::size_t>(n_)}; }
  double weight(std::size_t i) const { return weights_[i]; }
  double integrate(const std::function<double(std::span<const double>)>& f) const;

 private:
  int n_;
  std::vector<double> points_, weights_;
};

// L u = (n - 2 + theta . grad) u / (2 |theta|^2) on R^n, applied m times exactly.
double L_apply(const TestFunction& phi, int m, std::span<const double> theta);
// Same, on a ray jet u(t) = phi(t omega); returns the jet of L^m u truncated by m orders.
Jet L_apply_ray(const Jet& u, double t0, int n, int m);

// r^{n-1} int_S L^j phi(r omega) d sigma for j = 0..max_power.
std::vector<double> sphere_moments(const TestFunction& phi, const SphereRule& rule, double r, int max_power);

// <pullback of chi_+^{-k} under rho^2 - |theta|^2, phi>, via the substitution
// (-1)^{k-1} d^{k-1}/du^{k-1} [Phi(sqrt(rho^2 - u)) / (2 sqrt(rho^2 - u))] at u = 0,
// with central differences at step h and one Richardson step.
double pair_pullback(int k, double rho, const TestFunction& phi, int n, double h = 1e-3);
// The k = 1 case from a spherical Fibonacci point set on S^2 (independent sampling path).
double pair_pullback_sampling(double rho, const TestFunction& phi, std::size_t points = 2000000);

PairingResult verify_dist_identity(int k, double rho, const TestFunction& phi, int n);

enum class CounterKind { Induc, Rev };

struct CounterSetup {
  int d = 3;
  int k = 2;
  double eps = 1.0 / 32;
  double delta = 1.0 / 32;  // eps0 for the induction form
  double tau = 1.0;
  Cutoff zeta = Cutoff::psi0();
};

// <m^j[zeta^{(i)}, delta](., tau), L^p h> over R^{d-1}, by radial quadrature.
cplx counter_pairing(const CounterSetup& s, int j, int zeta_derivative, int L_power, const TestFunction& h);

PairingResult verify_counter_identities(CounterKind kind, const CounterSetup& setup, const TestFunction& h);
// rev applied to every term of induc must reproduce the original pairing.
PairingResult verify_counter_round_trip(const CounterSetup& setup, const TestFunction& h);

struct CounterSuiteResult {
  PairingResult induc, rev, round_trip;
};
// All three checks from one tabulation of the sphere moments of h.
CounterSuiteResult verify_counter_suite(const CounterSetup& setup, const TestFunction& h);

}  // namespace carleman
