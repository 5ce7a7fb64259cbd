#include <carleman/errors.hpp>
#include <carleman/regions.hpp>
#include <carleman/rng.hpp>
#include <gtest/gtest.h>

using namespace carleman;
using R = Rational;

namespace {

ExponentPoint pt(long long a, long long b, long long c, long long d) { return {R(a, b), R(c, d)}; }

}  // namespace

TEST(Duality, FixedPointsAndKnownValue) {
  EXPECT_EQ(dual_point(pt(1, 1, 0, 1)), pt(1, 1, 0, 1));
  EXPECT_EQ(dual_point(pt(1, 2, 1, 2)), pt(1, 2, 1, 2));
  EXPECT_EQ(dual_point(pt(7, 8, 3, 40)), pt(37, 40, 1, 8));
}

TEST(Duality, InvolutionOnRandomRationals) {
  CounterRng rng(7, 1);
  for (int i = 0; i < 10000; ++i) {
    const long long den = 1 + rng() % 997;
    const ExponentPoint P{R(static_cast<long long>(rng() % (den + 1)), den),
                          R(static_cast<long long>(rng() % (den + 1)), den)};
    const auto Q = dual_point(P);
    ASSERT_TRUE(in_square(Q));
    ASSERT_EQ(dual_point(Q), P);
  }
}

TEST(SpecialPoints, FiveTwo) {
  const auto s = special_points({5, 2});
  EXPECT_EQ(s.B, pt(7, 8, 3, 40));
  EXPECT_EQ(s.D, pt(7, 8, 0, 1));
  EXPECT_EQ(s.F, pt(7, 10, 0, 1));
  EXPECT_EQ(s.A, pt(1, 2, 3, 10));
  EXPECT_EQ(s.H, pt(1, 1, 0, 1));
  EXPECT_FALSE(s.G.has_value());
}

TEST(SpecialPoints, SevenTwoHasG) {
  const auto s = special_points({7, 2});
  ASSERT_TRUE(s.G.has_value());
  EXPECT_EQ(*s.G, pt(55, 84, 1, 12));
}

TEST(SpecialPoints, ThreeOneHasNoG) { EXPECT_FALSE(special_points({3, 1}).G.has_value()); }

TEST(SpecialPoints, RejectsLowDimension) { EXPECT_THROW(point_A(2), DomainError); }

TEST(SpecialPoints, LineIdentitiesForAllValidPairs) {
  for (int d = 3; d <= 12; ++d)
    for (int k = 1; 2 * k < d; ++k) {
      const auto s = special_points({d, k});
      const R D = d, K = k;
      EXPECT_EQ(D * s.E.x - s.E.y, (D - 2 + 2 * K) / 2) << d << "," << k;
      EXPECT_EQ(s.E.x - s.E.y, 2 * K / (D + 2));
      EXPECT_EQ(s.G.has_value(), 2 * k < d - 2);
      if (s.G) {
        const auto& G = *s.G;
        EXPECT_EQ(G.x - G.y, 2 * K / D);
        EXPECT_EQ((G.x - s.E.x) * (s.F.y - s.E.y), (G.y - s.E.y) * (s.F.x - s.E.x));
        EXPECT_GE(G.x, std::min(s.E.x, s.F.x));
        EXPECT_LE(G.x, std::max(s.E.x, s.F.x));
      }
    }
}

TEST(Regions, TriangleExamples) {
  EXPECT_TRUE(in_region(RegionId::T_kd, {5, 2}, pt(1, 2, 0, 1)));
  EXPECT_FALSE(in_region(RegionId::T_kd, {5, 2}, pt(7, 8, 1, 40)));
}

TEST(Regions, PentagonContainsE) {
  const DimensionPair dims{5, 2};
  EXPECT_TRUE(in_region(RegionId::Pentagon, dims, special_points(dims).E));
}

TEST(Carleman, Examples) {
  EXPECT_FALSE(carleman_range({5, 2}, pt(4, 5, 0, 1)));
  EXPECT_TRUE(carleman_range({7, 2}, pt(55, 84, 1, 12)));
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j) EXPECT_FALSE(carleman_range({3, 2}, {R(i, 20), R(j, 20)}));
}

// carleman_range agrees with (gap line) and (pentagon) and the open Lebesgue constraints.
TEST(Carleman, MatchesGapLineAndPentagonOnLattice) {
  for (auto [d, k] : std::vector<std::pair<int, int>>{{5, 2}, {7, 2}, {3, 1}, {9, 3}, {8, 3}}) {
    const DimensionPair dims{d, k};
    const int N = 2 * d * (d - 1) * (d + 2);
    const R gap = R(2 * k, d);
    for (int i = 0; i <= N; ++i) {
      const R x(i, N);
      for (int off : {-2, 0, 2}) {
        const R y = x - gap + R(off, N);
        if (y < 0 || y > 1) continue;
        const ExponentPoint P{x, y};
        const bool synth = in_region(RegionId::GapLine, dims, P) && in_region(RegionId::Pentagon, dims, P) &&
                           P.y > 0 && P.x < 1;
        ASSERT_EQ(carleman_range(dims, P), synth) << d << "," << k << " " << to_string(P);
      }
    }
  }
}

// For (d-2)/2 <= k < d/2 the interval condition follows from the line and the open constraints.
TEST(Carleman, SecondConditionVacuousNearHalfDimension) {
  for (auto [d, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {5, 2}, {6, 2}, {7, 3}}) {
    const int N = 4 * d * (d - 1);
    const R gap = R(2 * k, d);
    for (int i = 0; i <= N; ++i) {
      const R x(i, N), y = x - gap;
      if (y <= 0 || x >= 1) continue;
      EXPECT_TRUE(carleman_range({d, k}, {x, y})) << d << "," << k;
    }
  }
}

TEST(Figure, FiveTwoThickSegment) {
  const auto fig = emit_figure_data({5, 2});
  bool found = false;
  for (const auto& pl : fig.polylines)
    for (std::size_t i = 0; i + 1 < pl.vertices.size(); ++i)
      if (pl.vertices[i] == pt(4, 5, 0, 1) && pl.vertices[i + 1] == pt(1, 1, 1, 5)) found = true;
  EXPECT_TRUE(found);
}

TEST(Figure, SevenTwoSegmentIsGToDual) {
  const auto fig = emit_figure_data({7, 2});
  const auto G = *special_points({7, 2}).G;
  bool found = false;
  for (const auto& pl : fig.polylines)
    if (pl.vertices.size() == 2 && pl.vertices[0] == G && pl.vertices[1] == dual_point(G)) found = true;
  EXPECT_TRUE(found);
}

TEST(Parse, PointForms) {
  EXPECT_EQ(parse_point("55/84,1/12"), pt(55, 84, 1, 12));
  EXPECT_THROW(parse_point("3/2,0"), DomainError);
}
