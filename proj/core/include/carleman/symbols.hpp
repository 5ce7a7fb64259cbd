#pragma once
#include <complex>
#include <span>
#include <string>

#include "carleman/cutoffs.hpp"

namespace carleman {

using cplx = std::complex<double>;

enum class SymbolFamily {
  Full,           // (|xi|^2 + 2 i xi_d - 1)^{-k}
  MLocal,         // sum of m_eps over dyadic eps <= eps0
  MGlobal,        // Full - MLocal, evaluated as Full * (1 - chi)
  MEps,           // single dyadic piece m_eps
  MTilde,         // rescaled piece
  MTildeGen,      // rescaled piece with general zeta and delta
  RingLocalized,  // MTildeGen with delta = 2^j eps
  Constant,
  FullInverse,    // (|xi|^2 + 2 i xi_d - 1)^{k}
};

// Post-processing applied to the evaluated symbol.
enum class SymbolPart { Complex, Conjugate, Real, Imag };

struct SymbolSpec {
  SymbolFamily family = SymbolFamily::Full;
  int d = 3;
  int k = 1;
  double eps = 1.0 / 64;
  double eps0 = 1.0 / 32;
  Cutoff zeta = Cutoff::psi0();
  double delta = 1.0 / 32;
  int j = 0;
  cplx constant{1.0, 0.0};
  SymbolPart part = SymbolPart::Complex;
  bool require_dyadic = true;

  // Throws DomainError when the parameters leave the admissible set.
  void validate() const;
  SymbolSpec conjugated() const;
  SymbolSpec with_part(SymbolPart p) const;
  std::string describe() const;
};

SymbolSpec make_full(int d, int k);
SymbolSpec make_mtilde(int d, int k, double eps, double eps0 = 1.0 / 32);
SymbolSpec make_meps(int d, int k, double eps, double eps0 = 1.0 / 32);
SymbolSpec make_mtilde_gen(int d, int k, double eps, Cutoff zeta, double delta);
SymbolSpec make_ring(int d, int k, double eps, int j, Cutoff zeta = Cutoff::psi());

bool is_dyadic(double v);

// xi has d components; the last one is the time frequency tau.
cplx eval_symbol(const SymbolSpec& spec, std::span<const double> xi);
// Same evaluation from (|eta|^2, tau), which is all every family depends on.
cplx eval_symbol_radial(const SymbolSpec& spec, double eta_sq, double tau);

// Literal alternating binomial sum for Im of the rescaled piece.
double eval_im_mtilde(int d, int k, double eps, double eps0, double eta_sq, double tau);

// psi0^{(l)}((1 - rho^2)/eps0) psi(tau) / (rho^2 - 1 + eps^2 tau^2 + 2 i eps tau).
cplx eval_phi_eps_ell(double eps, int ell, double rho, double tau, double eps0 = 1.0 / 32);

}  // namespace carleman
