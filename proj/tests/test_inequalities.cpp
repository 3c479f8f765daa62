#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "barrow/bisectors.hpp"
#include "barrow/errors.hpp"
#include "barrow/harness.hpp"
#include "barrow/inequalities.hpp"
#include "oracles.hpp"

using namespace barrow;

namespace {

constexpr double kPi = std::numbers::pi;
const Triangle kUnit({0, 0}, {1, 0}, {0, 1});

Triangle unit_equilateral() {
  const double s = std::sqrt(3.0) / 2.0;
  return Triangle({0, 1}, {-s, -0.5}, {s, -0.5});
}

}  // namespace

TEST(Statements, Examples) {
  EXPECT_NEAR(stmt_slack(Statement::S1, 1, 1, 1, kPi / 3, kPi / 3), 0.0, 1e-15);
  EXPECT_NEAR(stmt_slack(Statement::S2, 1, 1, 1, kPi / 4, kPi / 4), 3 - 2 * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(stmt_slack(Statement::S3, 1, 1, 1, kPi / 3, kPi / 3), 6.0, 1e-15);
  EXPECT_NEAR(stmt_slack(Statement::S2, 1, 0, 1, 0, 0.4), 0.0, 1e-15);
}

TEST(Statements, DomainErrors) {
  EXPECT_THROW(stmt_slack(Statement::S1, -1, 1, 1, 0.1, 0.1), DomainError);
  EXPECT_THROW(stmt_slack(Statement::S2, 1, 1, 1, -0.1, 0.1), DomainError);
  EXPECT_THROW(stmt_slack(Statement::S3, 1, 1, 1, 2.0, 2.0), DomainError);
  EXPECT_THROW(stmt_slack(Statement::S1, NAN, 1, 1, 0.1, 0.1), DomainError);
  EXPECT_THROW(identity_residuals(1, 1, 1, 1.0, 0.5), DomainError);
}

TEST(Statements, NonNegativeOnRandomTuples) {
  RandomStream rng = stream_for(41, 0);
  for (int i = 0; i < 100000; ++i) {
    const double p = rng.uniform(0, 10), q = rng.uniform(0, 10), r = rng.uniform(0, 10);
    const double beta = rng.uniform(0, kPi);
    const double gamma = rng.uniform(0, kPi - beta);
    const double tol = 1e-12 * (p + q + r);
    ASSERT_GE(stmt_slack(Statement::S1, p, q, r, beta, gamma), -tol);
    ASSERT_GE(stmt_slack(Statement::S2, p, q, r, beta, gamma), -tol);
    ASSERT_GE(stmt_slack(Statement::S3, p, q, r, beta, gamma), -tol);
  }
}

TEST(Identities, Examples) {
  EXPECT_LE(identity_residuals(2, 3, 5, 0.7, 1.9).max(), 1e-12);
  const IdentityResiduals zero = identity_residuals(0, 0, 0, 0.3, 1.1);
  EXPECT_EQ(zero.max(), 0.0);
}

TEST(Identities, RandomSweep) {
  RandomStream rng = stream_for(42, 0);
  for (int i = 0; i < 10000; ++i) {
    const double p = rng.uniform(0, 10), q = rng.uniform(0, 10), r = rng.uniform(0, 10);
    const double alpha = rng.uniform(0, kPi);
    const double beta = rng.uniform(0, alpha);
    ASSERT_LE(identity_residuals(p, q, r, beta, alpha).max(), 1e-12 * std::max(1.0, p + q + r));
  }
}

TEST(Weights, LuExamples) {
  WeightTriple w = lu_weights({1, 1, 1});
  EXPECT_EQ(w.wa, 2.0);
  EXPECT_EQ(w.wb, 2.0);
  EXPECT_EQ(w.wc, 2.0);
  w = lu_weights({std::sqrt(2.0), 1, 1});
  EXPECT_EQ(w.wa, 2.0);
  EXPECT_NEAR(w.wb, 2.0301035302564356, 1e-15);
  EXPECT_NEAR(w.wc, 2.0301035302564356, 1e-15);
  w = lu_weights({4, 1, 1});
  EXPECT_NEAR(w.wb, 2.5, 1e-15);
  EXPECT_NEAR(w.wc, 2.5, 1e-15);
  EXPECT_THROW(lu_weights({1, 0, 1}), VertexCoincidence);
}

TEST(Weights, SideWeights) {
  const WeightTriple w = side_weights(kUnit);
  EXPECT_NEAR(w.wa, 2.0, 1e-15);
  EXPECT_NEAR(w.wb, 2.1213203435596424, 1e-15);
  EXPECT_NEAR(w.wc, 2.1213203435596424, 1e-15);
}

TEST(Reports, Dergiades) {
  const InequalityReport r = dergiades_report(kUnit, {0.25, 0.25});
  EXPECT_NEAR(r.lhs, 1.9346922206774634, 1e-14);
  EXPECT_NEAR(r.rhs, 1.7677669529663687, 1e-14);
  EXPECT_NEAR(r.slack, 0.16692526771109471, 1e-14);
  EXPECT_NEAR(dergiades_report(unit_equilateral(), {0, 0}).slack, 0.0, 1e-14);
  EXPECT_GT(dergiades_report(kUnit, {30, -40}).slack, 0.0);
}

TEST(Reports, Classic) {
  const ClassicReports eq = classic_reports(unit_equilateral(), {0, 0});
  EXPECT_NEAR(eq.barrow.lhs, 3.0, 1e-15);
  EXPECT_NEAR(eq.barrow.rhs, 3.0, 1e-14);
  EXPECT_LE(std::abs(eq.barrow.slack), 1e-14);
  EXPECT_LE(std::abs(eq.erdos_mordell.slack), 1e-14);
  EXPECT_TRUE(is_tight(eq.barrow));

  const ClassicReports u = classic_reports(kUnit, {0.25, 0.25});
  EXPECT_NEAR(u.erdos_mordell.slack, 0.2275854394909159, 1e-14);
  EXPECT_THROW(classic_reports(kUnit, {1, 1}), OutsideInterior);
  EXPECT_THROW(lu_report(kUnit, {0.5, 0}), OutsideInterior);
}

TEST(Reports, EvaluateExamples) {
  const InequalityReport eq = evaluate(unit_equilateral(), {0, 0});
  EXPECT_EQ(eq.id, InequalityId::LuWeighted);
  EXPECT_LE(std::abs(eq.slack), 1e-14);

  const InequalityReport r = evaluate(kUnit, {1, 1});
  EXPECT_EQ(r.id, InequalityId::SignedBarrow);
  EXPECT_EQ(r.region, Region::Mu1);
  EXPECT_NEAR(r.lhs, 2 + std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(r.rhs, 2.980522891498145, 1e-14);
  EXPECT_NEAR(r.slack, 0.43369067087495, 1e-14);
  EXPECT_EQ(term_signs(r), (SignTriple{{-1, 1, 1}}));
  ASSERT_EQ(r.terms.size(), 3u);
  for (const Term& t : r.terms) EXPECT_EQ(t.contribution, t.weight * t.value);
}

TEST(Reports, EvaluateAtVertex) {
  const InequalityReport r = evaluate(kUnit, kUnit.B());
  EXPECT_EQ(r.id, InequalityId::VertexB);
  EXPECT_EQ(r.region, Region::VertexB);
  const DistanceTriple d = vertex_distances(kUnit, kUnit.B());
  EXPECT_EQ(r.lhs, d.ra + d.rc);
  const double w = std::sqrt(d.rc / d.ra) + std::sqrt(d.ra / d.rc);
  const double lb = bisector_length(kUnit.B(), kUnit.C(), kUnit.A());
  EXPECT_NEAR(r.rhs, w * lb, 1e-15);
  EXPECT_GE(r.slack, 0.0);
  ASSERT_EQ(r.terms.size(), 1u);
  EXPECT_EQ(r.terms[0].side, 1);
  EXPECT_THROW(signed_barrow_report(kUnit, kUnit.B()), VertexCoincidence);
}

TEST(Reports, Names) {
  EXPECT_EQ(to_string(InequalityId::ErdosMordell), "erdos-mordell");
  EXPECT_EQ(inequality_from_string("signed-barrow"), InequalityId::SignedBarrow);
  EXPECT_FALSE(inequality_from_string("barrow2"));
}

TEST(ReportProperties, InteriorReductionAndBisectorDominance) {
  for (int i = 0; i < 10000; ++i) {
    RandomStream rng = stream_for(43, static_cast<std::uint64_t>(i));
    const Triangle t = sample_triangle(rng, TriangleShape::Mixed);
    const Point2 m = sample_point(rng, t, SampleTarget::Lambda0);
    const InequalityReport lu = lu_report(t, m);
    const InequalityReport sb = signed_barrow_report(t, m);
    ASSERT_EQ(lu.rhs, sb.rhs) << "sample " << i;
    ASSERT_EQ(evaluate(t, m).rhs, lu.rhs);
    const BisectorTriple l = bisectors(t, m);
    const SignedDistanceTriple d = signed_distances(t, m);
    for (int k = 0; k < 3; ++k) {
      ASSERT_GE(l[k], d[k] - 1e-12 * t.diameter()) << "sample " << i;
    }
  }
}

TEST(ReportProperties, Homogeneity) {
  for (int i = 0; i < 5000; ++i) {
    RandomStream rng = stream_for(44, static_cast<std::uint64_t>(i));
    const Triangle t = sample_triangle(rng, TriangleShape::EquilateralPerturbed, 0.3);
    const Point2 m = sample_point(rng, t, static_cast<SampleTarget>(i % 7));
    const double k = rng.log_uniform(-3, 3);
    const Triangle tk = t.transformed(k, 0.0, {0, 0});
    const Point2 mk = k * m;
    const InequalityReport a = evaluate(t, m);
    const InequalityReport b = evaluate(tk, mk);
    ASSERT_NEAR(b.slack, k * a.slack, 1e-10 * k * a.scale) << "sample " << i;
    ASSERT_NEAR(dergiades_report(tk, mk).slack, k * dergiades_report(t, m).slack, 1e-10 * k * a.scale);
  }
}

TEST(ReportProperties, NonNegativeEverywhere) {
  for (int i = 0; i < 20000; ++i) {
    RandomStream rng = stream_for(45, static_cast<std::uint64_t>(i));
    const auto target = static_cast<SampleTarget>(i % kNumTargets);
    const Triangle t = sample_triangle(rng, TriangleShape::EquilateralPerturbed, 0.5);
    const Point2 m = sample_point(rng, t, target);
    const InequalityReport r = evaluate(t, m);
    ASSERT_FALSE(is_violation(r)) << "sample " << i << " slack " << r.slack;
    ASSERT_FALSE(is_violation(dergiades_report(t, m)));
    if (r.region == Region::Lambda0) {
      const ClassicReports c = classic_reports(t, m);
      ASSERT_FALSE(is_violation(c.barrow));
      ASSERT_FALSE(is_violation(c.erdos_mordell));
      ASSERT_GE(c.erdos_mordell.slack, c.barrow.slack - 1e-12 * c.barrow.scale);
    }
    if (!is_vertex(r.region) && sign_pattern(barycentric(t, m)).zeros() == 0) {
      ASSERT_EQ(term_signs(r), expected_pattern(r.region)) << "sample " << i;
    }
  }
}

TEST(ReportProperties, VertexReportsHoldAtEveryVertex) {
  for (int i = 0; i < 1000; ++i) {
    RandomStream rng = stream_for(46, static_cast<std::uint64_t>(i));
    const Triangle t = sample_triangle(rng, TriangleShape::Mixed);
    for (int v = 0; v < 3; ++v) {
      const InequalityReport r = evaluate(t, t.vertex(v));
      ASSERT_EQ(vertex_index(r.region), v);
      ASSERT_FALSE(is_violation(r));
    }
  }
}
