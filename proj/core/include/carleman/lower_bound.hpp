#pragma once
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "carleman/jet.hpp"

namespace carleman {

using cplx = std::complex<double>;

// Radial profile of the lower-bound witness.
// phi(rho) = rho^{-(d-2k)/2} plateau(rho - 1), with plateau(u) = psi0(u / delta0):
// symmetric, equal to 1 on |u| <= delta0 and supported in |u| <= 2 delta0.
struct Phi5Spec {
  int d = 5;
  int k = 2;
  double delta0 = 0.125;

  double plateau(double u) const;               // the symmetric bump
  double varphi(double rho) const { return plateau(rho - 1.0); }
  double phi(double rho) const;
  Jet phi_jet(double rho, std::size_t order) const;
  double support_lo() const { return 1.0 - 2.0 * delta0; }
  double support_hi() const { return 1.0 + 2.0 * delta0; }

  // Coefficients a_l(rho), l = 0..k-1, of T^{k-1}(rho^{d-2} phi(rho) sigma^(rho y))
  // in the basis |y|^{2l} (rho|y|)^{-nu-l} J_{nu+l}(rho|y|), T h = (h / rho)'.
  std::vector<double> phi_l(double rho) const;
};

struct LowerBoundParams {
  int d = 5;
  int k = 2;
  double eps = 1.0 / 64;
  double delta0 = 0.125;
  double lambda = 0.0;  // 0 selects the bisection value
  double mu = 0.0;      // 0 selects 2^-7 / lambda
  double c0 = 0.3;
  double c1 = 0.3;
  double c2 = 0.8;
  double t_tilde = 0.0;  // calibrated, recorded only
  int samples_per_window = 3;

  void resolve();  // fills lambda, mu and checks the invariants
};

// b(u) = int_{|s| <= u} ds / (s^2 + 1).
double b_integral(double u);
// Smallest lambda with b(lambda/4) >= 2^4 (b(inf) - b(lambda/4)), by bisection.
double choose_lambda();

enum class IWhich { I1, I2, I3, I4, Tilde1, Tilde2 };

// The four rho-integrals with kernel numerators 2 eps tau or (rho^2 - 1 + eps^2 tau^2)
// and oscillation cos or sin((rho - 1)|y|); the tilde variants drop the oscillation.
double I_integral(IWhich which, double tau, double y, double eps, const std::function<double(double)>& varphi,
                  double delta0, double abs_tol = 1e-9);
double I_integral(IWhich which, double tau, double y, double eps, const Phi5Spec& spec);

// Direct evaluation of the rescaled multiplier applied to the radial witness at (|y|, t).
cplx mtilde_radial(int d, int k, double eps, const Phi5Spec& spec, double y, double t);

struct JDecomposition {
  std::vector<cplx> J;  // J_l, l = 0..k-1
  cplx J1, J2, J3;      // pieces of J_{k-1}
  cplx J_top_from_pieces;  // c_top (sqrt(2/pi)(J1 - J2) + J3)
  double prefactor = 0.0;  // (2 pi)^{-d} / (2^{k-1} (k-1)!)
  cplx total() const;      // prefactor * sum J_l
};

JDecomposition J_decomposition(int d, int k, double eps, const Phi5Spec& spec, double y, double t);

struct FrakSSample {
  std::vector<double> values;
  std::string empty_reason;
};

// |y| in [c1/eps, c2/eps] with |y| - alpha_{d,k} in 2 pi Z + [-c0, c0].
FrakSSample frak_S_sample(const LowerBoundParams& params);
double alpha_dk(int d, int k);

// Largest t on the grid keeping min |m f| over ys within a factor 2 of its t = 0 value.
double calibrate_t_tilde(const LowerBoundParams& params, const Phi5Spec& spec, const std::vector<double>& ys,
                         const std::vector<double>& t_grid);

}  // namespace carleman
