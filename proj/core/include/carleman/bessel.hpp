#pragma once

namespace carleman {

// J_nu(r) for r >= 0 and nu an integer or half-integer in [0, 30].
// Absolute error about 1e-12 for r <= 1e4; other orders throw UnsupportedOrder.
double bessel_j(double nu, double r);

// r^{-nu} J_nu(r), finite at r = 0.
double bessel_j_scaled(double nu, double r);

// Fourier transform of the surface measure on S^{n-1}, as a function of |xi|.
double sphere_hat(int n, double r);

double sphere_area(int n);  // |S^{n-1}|

}  // namespace carleman
