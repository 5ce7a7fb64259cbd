#include "carleman/knapp.hpp"

#include <cmath>

#include "carleman/cutoffs.hpp"
#include "carleman/errors.hpp"

namespace carleman {

std::vector<GridAxis> knapp_axes(int d, double eps, double delta0, const KnappGridParams& params) {
  if (d < 2) throw DomainError("Knapp witness needs d >= 2");
  const double wd = delta0 * eps;
  const double sq = std::sqrt(wd);
  std::vector<GridAxis> axes;
  auto add = [&](double centre, double width) {
    const double step = width / params.cells_per_support;
    axes.push_back({params.n, 2 * 3.141592653589793 / step, centre});
  };
  for (int j = 0; j < d - 2; ++j) add(1.25 * sq, 1.5 * sq);
  add(1.0 + 1.25 * wd, 1.5 * wd);
  const double ts = params.scale_tau ? eps : 1.0;
  add(1.25 * ts, 1.5 * ts);
  return axes;
}

GridField make_knapp(int d, int k, double eps, double delta0, const KnappGridParams& params) {
  (void)k;
  if (!(eps > 0) || !(delta0 > 0)) throw DomainError("Knapp witness needs eps, delta0 > 0");
  const auto axes = knapp_axes(d, eps, delta0, params);
  const double wd = delta0 * eps;
  if (wd / axes[d - 2].freq_step() < 8.0) throw ResolutionError("thin Knapp direction has fewer than 8 cells");
  const double sq = std::sqrt(wd);
  const double ts = params.scale_tau ? eps : 1.0;
  const Cutoff phi = Cutoff::knapp_bump();
  GridField fhat = GridField::from_function(axes, Domain::Frequency, [&](std::span<const double> xi) -> cplx {
    double v = phi(xi[d - 1] / ts) * phi((xi[d - 2] - 1.0) / wd);
    for (int j = 0; j < d - 2 && v != 0.0; ++j) v *= phi(xi[j] / sq);
    return v;
  });
  return fhat.to_space();
}

bool in_knapp_rectangle(std::span<const double> xi, double eps, double delta0) {
  const int d = static_cast<int>(xi.size());
  const double wd = delta0 * eps;
  const double sq = std::sqrt(wd);
  for (int j = 0; j < d - 2; ++j)
    if (xi[j] < sq || xi[j] > 1.5 * sq) return false;
  if (xi[d - 2] < 1 + wd || xi[d - 2] > 1 + 1.5 * wd) return false;
  return xi[d - 1] >= 1.0 && xi[d - 1] <= 1.5;
}

bool in_knapp_set(std::span<const double> x, double eps) {
  const int d = static_cast<int>(x.size());
  if (std::abs(x[d - 1]) > 1e-3) return false;
  if (std::abs(x[d - 2]) > 1.0 / eps) return false;
  for (int j = 0; j < d - 2; ++j)
    if (std::abs(x[j]) > 1.0 / std::sqrt(eps)) return false;
  return true;
}

}  // namespace carleman
