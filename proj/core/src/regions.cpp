#include "carleman/regions.hpp"

#include "carleman/errors.hpp"

namespace carleman {

namespace {

void require_dims(const DimensionPair& dims) {
  if (dims.d < 3) throw DomainError("special points need d >= 3");
  if (dims.k < 1) throw DomainError("k must be positive");
  if (2 * dims.k >= dims.d) throw DomainError("special points need k < d/2");
}

Rational R(long long v) { return Rational(v); }

}  // namespace

bool in_square(const ExponentPoint& p) { return p.x >= 0 && p.x <= 1 && p.y >= 0 && p.y <= 1; }

ExponentPoint make_point(const Rational& x, const Rational& y) {
  ExponentPoint p{x, y};
  if (!in_square(p)) throw DomainError("point outside the unit square: " + to_string(p));
  return p;
}

ExponentPoint parse_point(std::string_view text) {
  // Accepts "x,y" where x and y are rationals such as "55/84,1/12".
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ConfigError("point must be 'x,y': " + std::string(text));
  return make_point(parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1)));
}

std::string to_string(const ExponentPoint& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

ExponentPoint dual_point(const ExponentPoint& p) { return {1 - p.y, 1 - p.x}; }

ExponentPoint point_A(int d) {
  if (d < 3) throw DomainError("A is defined only for d >= 3");
  return {Rational(1, 2), Rational(d - 2, 2 * d)};
}

ExponentPoint point_B(int d, const Rational& a) {
  return {(R(d) - 2 + 2 * a) / (2 * (d - 1)), R(d - 2) * (R(d) - 2 * a) / (2 * d * (d - 1))};
}

ExponentPoint point_D(int d, const Rational& a) { return {(R(d) - 2 + 2 * a) / (2 * (d - 1)), R(0)}; }

SpecialPoints special_points(const DimensionPair& dims) {
  require_dims(dims);
  const int d = dims.d, k = dims.k;
  const Rational a = dims.alpha_or_k();
  SpecialPoints s{
      point_A(d),
      point_B(d, a),
      {Rational(1, 2), R(0)},
      point_D(d, a),
      {R(d * d + 2 * k * d - 4) / (2 * (d + 2) * (d - 1)), R((d - 2) * (d + 2 - 2 * k)) / (2 * (d + 2) * (d - 1))},
      {R(d - 2 + 2 * k) / (2 * d), R(0)},
      {R(1), R(0)},
      std::nullopt};
  if (2 * k < d - 2)
    s.G = ExponentPoint{R((d + 2 * k) * (d - 2)) / (2 * d * (d - 1)), R(d - 2 * k - 2) / (2 * (d - 1))};
  return s;
}

bool in_region(RegionId id, const DimensionPair& dims, const ExponentPoint& p) {
  if (!in_square(p)) return false;
  const Rational d = dims.d, k = dims.k;
  const Rational& x = p.x;
  const Rational& y = p.y;
  switch (id) {
    case RegionId::P_alpha: {
      // Operator on R^n with n = d - 1; the printed superscript n+1 equals d.
      const Rational a = dims.alpha_or_k();
      const Rational n = d - 1;
      return x - y >= 2 * a / (n + 1) && x > (n - 1 + 2 * a) / (2 * n) && y < (n + 1 - 2 * a) / (2 * n);
    }
    case RegionId::T_kd:
      return x >= Rational(1, 2) && x < (d - 2 + 2 * k) / (2 * (d - 1)) && y >= 0 && y <= (d - 2) / d * (1 - x);
    case RegionId::Pentagon:
      return x - y >= 2 * k / (d + 2) && d * x - y >= (d - 2 + 2 * k) / 2 && d * y - x <= (d - 2 * k) / 2;
    case RegionId::CarlemanRange:
      return carleman_range(dims, p);
    case RegionId::GapLine:
      return x - y == 2 * k / d && x > 0 && x < 1 && y > 0 && y < 1;
  }
  return false;
}

bool carleman_range(const DimensionPair& dims, const ExponentPoint& p) {
  if (!in_square(p)) return false;
  const Rational d = dims.d, k = dims.k;
  if (dims.d < 3) return false;
  const Rational lo = (d + 2 * k) * (d - 2) / (2 * d * (d - 1));
  const Rational hi = (d + 2 * k) / (2 * (d - 1));
  return p.x - p.y == 2 * k / d && lo <= p.x && p.x <= hi && p.y > 0 && p.x < 1;
}

FigureData emit_figure_data(const DimensionPair& dims) {
  if (dims.d < 3) throw DomainError("figure data needs d >= 3");
  FigureData fig{dims, {}, {}};
  const Rational gap = Rational(2 * dims.k, dims.d);
  const bool has_points = 2 * dims.k < dims.d;
  if (has_points) {
    const SpecialPoints s = special_points(dims);
    auto add = [&](const std::string& name, const ExponentPoint& q) {
      fig.points.push_back({name, q});
      if (dual_point(q) != q) fig.points.push_back({name + "'", dual_point(q)});
    };
    fig.points.push_back({"A", s.A});
    add("B", s.B);
    fig.points.push_back({"C", s.C});
    add("D", s.D);
    add("E", s.E);
    add("F", s.F);
    fig.points.push_back({"H", s.H});
    if (s.G) add("G", *s.G);
    fig.polylines.push_back({"T", {s.A, s.B, s.D, s.C}, true, false});
    fig.polylines.push_back({"T'", {dual_point(s.A), dual_point(s.B), dual_point(s.D), dual_point(s.C)}, true, false});
    fig.polylines.push_back({"pentagon", {s.E, s.F, dual_point(s.E), dual_point(s.F), s.H}, true, false});
    if (s.G) {
      fig.polylines.push_back({"optimal_range", {*s.G, dual_point(*s.G)}, false, false});
    }
  }
  if (gap < 1) {
    Polyline line{"gap_line", {{gap, Rational(0)}, {Rational(1), 1 - gap}}, false, true};
    fig.polylines.push_back(line);
    const bool whole_line = has_points && !(2 * dims.k < dims.d - 2);
    if (whole_line) fig.polylines.push_back({"optimal_range", line.vertices, false, true});
  }
  return fig;
}

}  // namespace carleman
