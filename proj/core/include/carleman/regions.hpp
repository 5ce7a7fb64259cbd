#pragma once
#include <optional>
#include <string>
#include <vector>

#include "carleman/rational.hpp"

namespace carleman {

// (x, y) = (1/p, 1/q) in the closed unit square.
struct ExponentPoint {
  Rational x, y;
  bool operator==(const ExponentPoint&) const = default;
};

ExponentPoint make_point(const Rational& x, const Rational& y);  // validates membership
ExponentPoint parse_point(std::string_view text);                // "X,Y" with rationals, or "X/Y" wording below
bool in_square(const ExponentPoint& p);
std::string to_string(const ExponentPoint& p);

struct DimensionPair {
  int d = 3;
  int k = 1;
  std::optional<Rational> alpha;  // Bochner-Riesz index; defaults to k

  Rational alpha_or_k() const { return alpha ? *alpha : Rational(k); }
};

enum class RegionId { P_alpha, T_kd, Pentagon, CarlemanRange, GapLine };

ExponentPoint dual_point(const ExponentPoint& p);

struct SpecialPoints {
  ExponentPoint A, B, C, D, E, F, H;
  std::optional<ExponentPoint> G;  // present iff k < (d-2)/2
};

// Closed-form points; requires d >= 3 and 1 <= k < d/2.
SpecialPoints special_points(const DimensionPair& dims);

// Individual formulas, exposed for the alpha-dependent points.
ExponentPoint point_A(int d);
ExponentPoint point_B(int d, const Rational& alpha);
ExponentPoint point_D(int d, const Rational& alpha);

bool in_region(RegionId id, const DimensionPair& dims, const ExponentPoint& p);

// Exact characterization of the exponents for which the Carleman inequality holds.
bool carleman_range(const DimensionPair& dims, const ExponentPoint& p);

struct LabeledPoint {
  std::string label;
  ExponentPoint point;
};

struct Polyline {
  std::string label;
  std::vector<ExponentPoint> vertices;
  bool closed = false;
  bool open_endpoints = false;  // segment endpoints excluded from the set
};

struct FigureData {
  DimensionPair dims;
  std::vector<LabeledPoint> points;
  std::vector<Polyline> polylines;  // shaded regions, hulls, the optimal range
};

FigureData emit_figure_data(const DimensionPair& dims);

}  // namespace carleman
