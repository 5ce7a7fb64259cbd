#pragma once
#include "carleman/grid.hpp"

namespace carleman {

struct KnappGridParams {
  int n = 64;                        // samples per axis
  double cells_per_support = 16.0;   // lattice cells across each bump support
  bool scale_tau = false;            // witness for m_eps: tau axis shrunk by eps
};

// Frequency window that centres each axis on the witness support.
std::vector<GridAxis> knapp_axes(int d, double eps, double delta0, const KnappGridParams& params);

// Space-domain Knapp witness adapted to the cylinder S^{d-2} x [1/2, 2].
// Throws ResolutionError when the thin direction gets fewer than 8 cells.
GridField make_knapp(int d, int k, double eps, double delta0, const KnappGridParams& params = {});

// The rectangle on which the imaginary part keeps one sign.
bool in_knapp_rectangle(std::span<const double> xi, double eps, double delta0);
// The physical set where the witness response is bounded below.
bool in_knapp_set(std::span<const double> x, double eps);

}  // namespace carleman
