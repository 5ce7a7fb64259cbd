#pragma once
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "carleman/errors.hpp"

namespace carleman {

struct QuadResult {
  double abs_error = 0.0;
  std::size_t panels = 0;
};

namespace detail {
inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }
}  // namespace detail

// Sorted, deduplicated breakpoints clipped to [a, b], endpoints included.
std::vector<double> panel_edges(double a, double b, std::vector<double> interior);

// Globally adaptive 61-point Gauss-Kronrod over the given panels: the interval with the
// largest |Kronrod - Gauss| estimate is bisected until the summed estimate drops below
// max(abs_tol, rel_tol sum |panel|). Throws QuadratureError when the interval budget runs out.
template <class F>
auto integrate_panels(F&& f, const std::vector<double>& edges, double abs_tol, double rel_tol = 1e-10,
                      QuadResult* info = nullptr, std::size_t max_intervals = 4000) {
  using R = decltype(f(0.0));
  using boost::math::quadrature::gauss_kronrod;
  struct Piece {
    double a, b;
    R value;
    double err, mass;
  };
  auto rule = [&f](double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double err = 0.0, l1 = 0.0;
    auto g = [&](double x) { return f(c + h * x); };
    const R v = gauss_kronrod<double, 61>::integrate(g, -1.0, 1.0, 0, 0.0, &err, &l1);
    return Piece{a, b, v * h, err * h, l1 * h};
  };
  auto worse = [](const Piece& x, const Piece& y) { return x.err < y.err; };
  std::vector<Piece> heap;
  double err_total = 0.0, mass = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!(edges[i + 1] > edges[i])) continue;
    heap.push_back(rule(edges[i], edges[i + 1]));
    err_total += heap.back().err;
    mass += heap.back().mass;
  }
  std::make_heap(heap.begin(), heap.end(), worse);
  auto require_finite = [&] {
    if (!std::isfinite(err_total)) throw QuadratureError("non-finite integrand value or error estimate");
  };
  require_finite();
  while (!heap.empty() && err_total > std::max(abs_tol, rel_tol * mass)) {
    if (heap.size() >= max_intervals)
      throw QuadratureError("quadrature tolerance not met: error estimate " + std::to_string(err_total));
    std::pop_heap(heap.begin(), heap.end(), worse);
    const Piece p = heap.back();
    heap.pop_back();
    const double m = 0.5 * (p.a + p.b);
    if (!(m > p.a && m < p.b))
      throw QuadratureError("quadrature interval underflow near " + std::to_string(p.a));
    Piece l = rule(p.a, m), r = rule(m, p.b);
    err_total += l.err + r.err - p.err;
    mass += l.mass + r.mass - p.mass;
    require_finite();
    for (Piece* q : {&l, &r}) {
      heap.push_back(*q);
      std::push_heap(heap.begin(), heap.end(), worse);
    }
  }
  R total{};
  for (const auto& p : heap) total += p.value;
  if (info) {
    info->abs_error = err_total;
    info->panels = heap.size();
  }
  return total;
}

// Fixed 64-point Gauss-Legendre rule on [a, b].
template <class F>
auto gauss64(F&& f, double a, double b) {
  return boost::math::quadrature::gauss<double, 64>::integrate(f, a, b);
}

// Gauss-Legendre nodes and weights on [-1, 1] for an arbitrary order (Newton on P_n).
void gauss_legendre_rule(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace carleman
