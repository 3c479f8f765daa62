#include <gtest/gtest.h>

#include <numbers>

#include "barrow/harness.hpp"
#include "barrow/regions.hpp"
#include "oracles.hpp"

using namespace barrow;

namespace {
const Triangle kUnit({0, 0}, {1, 0}, {0, 1});
}

TEST(SignPattern, Examples) {
  EXPECT_EQ(sign_pattern({0.5, 0.25, 0.25}, 1e-12), (SignTriple{{1, 1, 1}}));
  EXPECT_EQ(sign_pattern({-3, 2, 2}), (SignTriple{{-1, 1, 1}}));
  EXPECT_EQ(sign_pattern({0.5, 0.5, 1e-15}, 1e-12), (SignTriple{{1, 1, 0}}));
  EXPECT_EQ(sign_pattern({0.5, 0.5, -1e-15}, 0.0), (SignTriple{{1, 1, -1}}));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(kUnit, {0.25, 0.25}), Region::Lambda0);
  EXPECT_EQ(classify(kUnit, {2, 2}), Region::Mu1);
  EXPECT_EQ(classify(kUnit, {0.5, 0}), Region::Mu3);
  EXPECT_EQ(classify(kUnit, {-0.5, -0.5}), Region::Mu4);
}

TEST(Classify, EveryOpenRegion) {
  // Unit triangle: u = 1 - x - y, v = x, w = y.
  EXPECT_EQ(classify(kUnit, {0.5, -0.5}), Region::Mu3);   // (+,+,-)
  EXPECT_EQ(classify(kUnit, {-0.5, 0.5}), Region::Mu2);   // (+,-,+)
  EXPECT_EQ(classify(kUnit, {2, -0.5}), Region::Mu5);     // (-,+,-)
  EXPECT_EQ(classify(kUnit, {-0.5, 2}), Region::Mu6);     // (-,-,+)
  EXPECT_EQ(classify(kUnit, {-1, -1}), Region::Mu4);      // (+,-,-)
}

TEST(Classify, SidelineTieBreak) {
  // Open side BC, and its two extension rays.
  EXPECT_EQ(classify(kUnit, {0.5, 0.5}), Region::Mu1);
  EXPECT_EQ(classify(kUnit, {2, -1}), Region::Mu3);  // beyond B: u=0, v=2, w=-1
  EXPECT_EQ(classify(kUnit, {-1, 2}), Region::Mu2);  // beyond C
  // Side CA (x = 0).
  EXPECT_EQ(classify(kUnit, {0, 0.5}), Region::Mu2);
  EXPECT_EQ(classify(kUnit, {0, 2}), Region::Mu1);
  EXPECT_EQ(classify(kUnit, {0, -1}), Region::Mu3);
  // Side AB (y = 0).
  EXPECT_EQ(classify(kUnit, {2, 0}), Region::Mu1);
  EXPECT_EQ(classify(kUnit, {-1, 0}), Region::Mu2);
}

TEST(Classify, Vertices) {
  EXPECT_EQ(classify(kUnit, kUnit.A()), Region::VertexA);
  EXPECT_EQ(classify(kUnit, kUnit.B()), Region::VertexB);
  EXPECT_EQ(classify(kUnit, kUnit.C()), Region::VertexC);
  EXPECT_EQ(classify(kUnit, {1e-13, 0}), Region::VertexA);
  EXPECT_NE(classify(kUnit, {1e-9, 1e-9}), Region::VertexA);
}

TEST(RegionOfPattern, SingleZeroAlwaysLandsInMu1To3) {
  EXPECT_EQ(region_of_pattern({{0, 1, 1}}), Region::Mu1);
  EXPECT_EQ(region_of_pattern({{0, 1, -1}}), Region::Mu3);
  EXPECT_EQ(region_of_pattern({{0, -1, 1}}), Region::Mu2);
  EXPECT_EQ(region_of_pattern({{1, 0, 1}}), Region::Mu2);
  EXPECT_EQ(region_of_pattern({{-1, 0, 1}}), Region::Mu1);
  EXPECT_EQ(region_of_pattern({{1, 1, 0}}), Region::Mu3);
  EXPECT_EQ(region_of_pattern({{1, -1, 0}}), Region::Mu2);
  EXPECT_THROW(region_of_pattern({{0, 0, 0}}), std::invalid_argument);
  EXPECT_THROW(region_of_pattern({{-1, -1, -1}}), std::invalid_argument);
}

TEST(RegionNames, RoundTrip) {
  for (Region r : kAllRegions) EXPECT_EQ(region_from_string(to_string(r)), r);
  EXPECT_EQ(to_string(Region::Mu4), "mu4");
  EXPECT_EQ(to_string(Region::VertexB), "vertexB");
  EXPECT_FALSE(region_from_string("lambda7"));
}

TEST(ClassifyProperties, AgreesWithLineOracleAndIsSimilarityInvariant) {
  for (int i = 0; i < 20000; ++i) {
    RandomStream rng = stream_for(7, static_cast<std::uint64_t>(i));
    const Triangle t = sample_triangle(rng, TriangleShape::Random);
    const BBox box = triangle_bbox(t, 2.0);
    const Point2 m{rng.uniform(box.x0, box.x1), rng.uniform(box.y0, box.y1)};
    const Region r = classify(t, m);
    ASSERT_EQ(r, oracle::region(t, m)) << "sample " << i;

    const double scale = rng.log_uniform(-1, 1);
    const double angle = rng.uniform(0, 2 * std::numbers::pi);
    const Point2 shift{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    ASSERT_EQ(classify(t.transformed(scale, angle, shift), similarity(m, scale, angle, shift)), r);
  }
}

TEST(ClassifyProperties, ClosureAndVertexExclusion) {
  // Points on sidelines labeled Mu1..Mu3 lie in the closure of the open region.
  for (int i = 0; i < 5000; ++i) {
    RandomStream rng = stream_for(8, static_cast<std::uint64_t>(i));
    const Triangle t = sample_triangle(rng, TriangleShape::EquilateralPerturbed, 0.3);
    const Point2 m = sample_point(rng, t, SampleTarget::Sideline);
    const Region r = classify(t, m);
    ASSERT_TRUE(r == Region::Mu1 || r == Region::Mu2 || r == Region::Mu3);
    bool touches = false;
    for (int k = 0; k < 16 && !touches; ++k) {
      const double theta = 2 * std::numbers::pi * k / 16;
      const Point2 probe = m + 1e-6 * t.diameter() * Point2{std::cos(theta), std::sin(theta)};
      const SignTriple s = sign_pattern(barycentric(t, probe), 0.0);
      touches = s.zeros() == 0 && region_of_pattern(s) == r;
    }
    ASSERT_TRUE(touches) << "sample " << i;
  }
  for (int v = 0; v < 3; ++v) {
    const Region r = classify(kUnit, kUnit.vertex(v));
    EXPECT_EQ(vertex_index(r), v);
  }
}

TEST(ClassifyProperties, OpenLabelsOnlyWithoutZeros) {
  // Mu4..Mu6 and Lambda0 never come from a snapped coordinate.
  for (int i = 0; i < 5000; ++i) {
    RandomStream rng = stream_for(9, static_cast<std::uint64_t>(i));
    const Triangle t = sample_triangle(rng, TriangleShape::Random);
    const Point2 m = sample_point(rng, t, SampleTarget::Sideline);
    const Region r = classify(t, m);
    ASSERT_NE(r, Region::Lambda0);
    ASSERT_NE(r, Region::Mu4);
    ASSERT_NE(r, Region::Mu5);
    ASSERT_NE(r, Region::Mu6);
  }
}
