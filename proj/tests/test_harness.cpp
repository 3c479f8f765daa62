#include <gtest/gtest.h>

#include <cmath>

#include "barrow/errors.hpp"
#include "barrow/harness.hpp"
#include "barrow/io.hpp"

using namespace barrow;

namespace {

Triangle unit_equilateral() {
  const double s = std::sqrt(3.0) / 2.0;
  return Triangle({0, 1}, {-s, -0.5}, {s, -0.5});
}

}  // namespace

TEST(RandomStream, Deterministic) {
  RandomStream a = stream_for(5, 17), b = stream_for(5, 17), c = stream_for(5, 18);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_NE(x, c.next());
  }
  RandomStream u = stream_for(1, 1);
  for (int i = 0; i < 10000; ++i) {
    const double x = u.uniform();
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
  }
}

TEST(SampleTriangle, EquilateralWithoutPerturbation) {
  RandomStream rng = stream_for(3, 0);
  const Triangle t = sample_triangle(rng, TriangleShape::EquilateralPerturbed, 0.0);
  EXPECT_NEAR(t.a() / t.b(), 1.0, 1e-12);
  EXPECT_NEAR(t.b() / t.c(), 1.0, 1e-12);
}

TEST(SampleTriangle, ShapeInvariants) {
  for (int i = 0; i < 10000; ++i) {
    RandomStream rng = stream_for(4, static_cast<std::uint64_t>(i));
    const auto shape = static_cast<TriangleShape>(i % 4);
    const Triangle t = sample_triangle(rng, shape);
    const double ratio = t.area() / (t.diameter() * t.diameter());
    ASSERT_GE(ratio, 10 * kDegenerateAreaFactor);
    if (shape == TriangleShape::Random) ASSERT_GE(ratio, 1e-6);
    if (shape == TriangleShape::NearDegenerate) ASSERT_LE(ratio, 1e-3);
    if (shape == TriangleShape::EquilateralPerturbed) ASSERT_GE(ratio, 0.3);
  }
}

TEST(SamplePoint, EveryTargetIsHit) {
  for (int k = 0; k < kNumTargets; ++k) {
    const auto target = static_cast<SampleTarget>(k);
    for (int i = 0; i < 2000; ++i) {
      RandomStream rng = stream_for(6 + static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(i));
      const Triangle t = sample_triangle(rng, TriangleShape::EquilateralPerturbed, 0.3);
      const Point2 m = sample_point(rng, t, target);
      ASSERT_TRUE(satisfies_target(t, m, target)) << to_string(target) << " sample " << i;
      const Region r = classify(t, m);
      if (k < 7) ASSERT_EQ(static_cast<int>(r), k);
      if (target == SampleTarget::NearVertex) ASSERT_FALSE(is_vertex(r));
      if (target == SampleTarget::Sideline) ASSERT_EQ(sign_pattern(barycentric(t, m)).zeros(), 1);
    }
  }
}

TEST(RegionMix, ValidationAndPick) {
  EXPECT_NO_THROW(RegionMix::uniform().validate());
  RegionMix bad = RegionMix::uniform();
  bad.weights[0] = 0.5;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  const RegionMix only = RegionMix::only(SampleTarget::Mu6);
  for (double u : {0.0, 0.3, 0.999999}) EXPECT_EQ(only.pick(u), SampleTarget::Mu6);
  EXPECT_EQ(RegionMix::uniform().pick(0.0), SampleTarget::Lambda0);
  EXPECT_EQ(RegionMix::uniform().pick(0.9999), SampleTarget::NearVertex);
}

TEST(Fuzz, StratifiedAndClean) {
  FuzzConfig cfg;
  cfg.n = 9000;
  const FuzzReport r = fuzz(cfg);
  EXPECT_EQ(r.violation_count, 0u);
  EXPECT_EQ(r.sign_mismatches, 0u);
  EXPECT_EQ(r.pattern_mismatches, 0u);
  for (int k = 0; k < kNumTargets; ++k) {
    EXPECT_GT(r.target_counts[static_cast<std::size_t>(k)], 800u) << k;
  }
  for (int k = 0; k < 7; ++k) EXPECT_GT(r.region_counts[static_cast<std::size_t>(k)], 0u);
}

TEST(Fuzz, SingleRegionMix) {
  FuzzConfig cfg;
  cfg.n = 500;
  cfg.mix = RegionMix::only(SampleTarget::Mu6);
  const FuzzReport r = fuzz(cfg);
  EXPECT_EQ(r.region_counts[static_cast<std::size_t>(Region::Mu6)], 500u);
  EXPECT_EQ(r.violation_count, 0u);
}

TEST(Fuzz, WorkerCountDoesNotChangeReport) {
  FuzzConfig cfg;
  cfg.n = 3000;
  cfg.seed = 11;
  const std::string one = io::dump_line(io::fuzz_json(fuzz(cfg)));
  cfg.workers = 3;
  EXPECT_EQ(io::dump_line(io::fuzz_json(fuzz(cfg))), one);
  cfg.seed = 12;
  EXPECT_NE(io::dump_line(io::fuzz_json(fuzz(cfg))), one);
}

TEST(Fuzz, CaseRegeneration) {
  FuzzConfig cfg;
  cfg.seed = 9;
  const SampleCase a = fuzz_case(cfg, 1234);
  const SampleCase b = fuzz_case(cfg, 1234);
  EXPECT_EQ(a.point.x, b.point.x);
  EXPECT_EQ(a.triangle[2].y, b.triangle[2].y);
}

TEST(Tightness, EquilateralCircumcenter) {
  const Triangle t = unit_equilateral();
  const TightnessResult r = tightness_search(t, InequalityId::Barrow);
  EXPECT_LE(distance(r.point, {0, 0}), 1e-6 * t.diameter());
  EXPECT_LE(std::abs(r.slack), 1e-9);
  EXPECT_EQ(r.region, Region::Lambda0);
  // The weighted form is much flatter at its minimum, so only the value is pinned.
  const TightnessResult lu = tightness_search(t, InequalityId::LuWeighted);
  EXPECT_LE(std::abs(lu.slack), 1e-9);
  EXPECT_LE(distance(lu.point, {0, 0}), 1e-3 * t.diameter());
}

TEST(Tightness, RegionRestrictionAndErrors) {
  const Triangle t = unit_equilateral();
  TightnessOptions opt;
  opt.region = Region::Mu1;
  const TightnessResult r = tightness_search(t, InequalityId::SignedBarrow, opt);
  EXPECT_EQ(r.region, Region::Mu1);
  EXPECT_GT(r.slack, 0.0);
  EXPECT_THROW(tightness_search(t, InequalityId::VertexA), DomainError);
}

TEST(GridScan, RowsAndAreaRatio) {
  const Triangle t({0, 0}, {4, 0}, {1, 2});
  const BBox box{-1, -1, 5, 3};
  const ScanGrid g = grid_scan(t, box, 200);
  ASSERT_EQ(g.rows.size(), 40000u);
  EXPECT_LT(g.rows[0].x, g.rows[1].x);
  EXPECT_EQ(g.rows[0].y, g.rows[1].y);
  EXPECT_LT(g.rows[0].y, g.rows[200].y);
  std::size_t inside = 0;
  for (const ScanRow& row : g.rows) {
    if (row.region == Region::Lambda0) ++inside;
    ASSERT_GE(row.slack, -1e-9 * (row.ra + row.rb + row.rc));
  }
  const double expected = t.area() / ((box.x1 - box.x0) * (box.y1 - box.y0));
  const double got = static_cast<double>(inside) / static_cast<double>(g.rows.size());
  EXPECT_NEAR(got / expected, 1.0, 0.05);
  EXPECT_THROW(grid_scan(t, box, 1), DomainError);
  EXPECT_THROW(grid_scan(t, BBox{0, 0, 0, 1}, 10), DomainError);
}

TEST(GridScan, VertexCell) {
  // With resolution 2 over [-1,1]^2 the centers are (+-0.5, +-0.5).
  const Triangle t({-0.5, -0.5}, {3, 0}, {0, 3});
  const ScanGrid g = grid_scan(t, BBox{-1, -1, 1, 1}, 2);
  EXPECT_EQ(g.rows[0].region, Region::VertexA);
  EXPECT_EQ(g.rows[0].lpb, 0.0);
  EXPECT_EQ(g.rows[0].lpc, 0.0);
  EXPECT_GT(g.rows[0].lpa, 0.0);
}
