#include "barrow/inequalities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "barrow/errors.hpp"

namespace barrow {

namespace {

constexpr double kPi = std::numbers::pi;

void require_nonnegative(double p, double q, double r) {
  if (!(p >= 0.0 && q >= 0.0 && r >= 0.0) || !std::isfinite(p + q + r)) {
    throw DomainError("p, q, r must be finite and non-negative");
  }
}

double weight(double x, double y) { return std::sqrt(x / y) + std::sqrt(y / x); }

InequalityReport weighted_report(InequalityId id, Region region, const DistanceTriple& r,
                                 const WeightTriple& w, const std::array<double, 3>& values) {
  InequalityReport rep;
  rep.id = id;
  rep.region = region;
  rep.scale = r.sum();
  rep.lhs = r.sum();
  rep.rhs = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double v = values[static_cast<std::size_t>(i)];
    const double c = w[i] * v;
    rep.terms.push_back(Term{i, w[i], v, c});
    rep.rhs += c;
  }
  rep.slack = rep.lhs - rep.rhs;
  return rep;
}

}  // namespace

double stmt_slack(Statement kind, double p, double q, double r, double beta, double gamma) {
  require_nonnegative(p, q, r);
  if (!(beta >= 0.0 && gamma >= 0.0 && beta + gamma <= kPi)) {
    throw DomainError("angles must satisfy beta, gamma >= 0 and beta + gamma <= pi");
  }
  const double alpha = kind == Statement::S1 ? kPi - beta - gamma : beta + gamma;
  const double tqr = 2.0 * std::sqrt(q * r) * std::cos(alpha);
  const double tpr = 2.0 * std::sqrt(p * r) * std::cos(beta);
  const double tpq = 2.0 * std::sqrt(p * q) * std::cos(gamma);
  double rhs = 0.0;
  switch (kind) {
    case Statement::S1: rhs = tqr + tpr + tpq; break;
    case Statement::S2: rhs = -tqr + tpr + tpq; break;
    case Statement::S3: rhs = tqr - tpr - tpq; break;
  }
  return p + q + r - rhs;
}

double IdentityResiduals::max() const { return std::max({lagrange, case1, case2, discriminant}); }

IdentityResiduals identity_residuals(double p, double q, double r, double beta, double alpha) {
  require_nonnegative(p, q, r);
  if (!(beta >= 0.0 && beta <= alpha && alpha <= kPi)) {
    throw DomainError("angles must satisfy 0 <= beta <= alpha <= pi");
  }
  const double gamma = alpha - beta;
  const double sp = std::sqrt(p), sq = std::sqrt(q), sr = std::sqrt(r);
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double cg = std::cos(gamma), sg = std::sin(gamma);
  const double sum = p + q + r;

  auto sqr = [](double x) { return x * x; };

  IdentityResiduals out;

  const double a2 = sum + 2 * sq * sr * ca - 2 * sp * sr * cb - 2 * sp * sq * cg;
  const double a2_squares = sqr(sr - sp * cb + sq * ca) + sqr(sp * sb - sq * sa);
  out.lagrange = std::abs(a2 - a2_squares);

  const double a3 = sum - 2 * sq * sr * ca + 2 * sp * sr * cb + 2 * sp * sq * cg;
  if (ca <= 0.0) {
    const double form = sqr(sr + sp * cb + sq * ca) + sqr(sp * sb + sq * sa) - 4 * sq * sr * ca;
    out.case1 = std::abs(a3 - form);
  } else {
    const double form = sqr(sr - sp * cb - sq * ca) + sqr(sp * sb + sq * sa) + 4 * sp * sr * cb;
    out.case2 = std::abs(a3 - form);
  }

  const double delta = 4.0 * (sqr(sr * cb + sq * cg) - (q + r + 2 * sq * sr * ca));
  const double delta_closed = -4.0 * sqr(sr * sb - sq * sg);
  out.discriminant = std::abs(delta - delta_closed);
  return out;
}

WeightTriple lu_weights(const DistanceTriple& r) {
  static constexpr char kNames[3] = {'A', 'B', 'C'};
  for (int i = 0; i < 3; ++i) {
    if (!(r[i] > 0.0)) {
      throw VertexCoincidence(kNames[i], std::string("R_") + kNames[i] +
                                             " = 0; use the reduced vertex inequality");
    }
  }
  return WeightTriple{weight(r.rc, r.rb), weight(r.rc, r.ra), weight(r.ra, r.rb)};
}

WeightTriple side_weights(const Triangle& t) {
  auto ratio_sum = [](double x, double y) { return x / y + y / x; };
  return WeightTriple{ratio_sum(t.c(), t.b()), ratio_sum(t.c(), t.a()), ratio_sum(t.a(), t.b())};
}

namespace {
constexpr std::array<std::string_view, 8> kIdNames{
    "barrow", "erdos-mordell", "dergiades", "lu", "signed-barrow", "vertex-a", "vertex-b", "vertex-c"};
}

std::string_view to_string(InequalityId id) { return kIdNames[static_cast<std::size_t>(id)]; }

std::optional<InequalityId> inequality_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kIdNames.size(); ++i) {
    if (kIdNames[i] == s) return static_cast<InequalityId>(i);
  }
  return std::nullopt;
}

bool is_tight(const InequalityReport& r, double tol_factor) {
  return std::abs(r.slack) <= tol_factor * r.scale;
}

bool is_violation(const InequalityReport& r, double tol_factor) {
  return r.slack < -tol_factor * r.scale;
}

SignTriple term_signs(const InequalityReport& r) {
  SignTriple s;
  for (const Term& t : r.terms) {
    s.s[static_cast<std::size_t>(t.side)] = t.value > 0 ? 1 : (t.value < 0 ? -1 : 0);
  }
  return s;
}

InequalityReport dergiades_report(const Triangle& t, Point2 m, double eps) {
  const SignedDistanceTriple d = signed_distances(t, m);
  return weighted_report(InequalityId::Dergiades, classify(t, m, eps), vertex_distances(t, m),
                         side_weights(t), {d.da, d.db, d.dc});
}

ClassicReports classic_reports(const Triangle& t, Point2 m, double eps) {
  const Region region = classify(t, m, eps);
  if (region != Region::Lambda0) {
    throw OutsideInterior("point is not interior (region " + std::string(to_string(region)) + ")");
  }
  const DistanceTriple r = vertex_distances(t, m);
  const BisectorTriple l = bisectors(t, m, eps);
  const SignedDistanceTriple d = signed_distances(t, m);
  const WeightTriple two{2.0, 2.0, 2.0};
  return ClassicReports{
      weighted_report(InequalityId::Barrow, region, r, two, {l.la, l.lb, l.lc}),
      weighted_report(InequalityId::ErdosMordell, region, r, two,
                      {std::abs(d.da), std::abs(d.db), std::abs(d.dc)})};
}

InequalityReport lu_report(const Triangle& t, Point2 m, double eps) {
  const Region region = classify(t, m, eps);
  if (region != Region::Lambda0) {
    throw OutsideInterior("point is not interior (region " + std::string(to_string(region)) + ")");
  }
  const DistanceTriple r = vertex_distances(t, m);
  const BisectorTriple l = bisectors(t, m, eps);
  return weighted_report(InequalityId::LuWeighted, region, r, lu_weights(r), {l.la, l.lb, l.lc});
}

InequalityReport signed_barrow_report(const Triangle& t, Point2 m, double eps) {
  const Region region = classify(t, m, eps);
  const DistanceTriple r = vertex_distances(t, m);
  const SignedBisectorTriple l = signed_bisectors(t, m, eps);
  return weighted_report(InequalityId::SignedBarrow, region, r, lu_weights(r),
                         {l.la, l.lb, l.lc});
}

InequalityReport vertex_report(const Triangle& t, Point2 m, int vertex) {
  if (vertex < 0 || vertex > 2) throw DomainError("vertex index must be 0, 1 or 2");
  const int j = (vertex + 1) % 3;
  const int k = (vertex + 2) % 3;
  const DistanceTriple r = vertex_distances(t, m);
  const double w = weight(r[k], r[j]);
  const double l = bisector_length(m, t.vertex(j), t.vertex(k));

  InequalityReport rep;
  rep.id = static_cast<InequalityId>(static_cast<int>(InequalityId::VertexA) + vertex);
  rep.region = static_cast<Region>(static_cast<int>(Region::VertexA) + vertex);
  rep.scale = r.sum();
  rep.lhs = r[j] + r[k];
  rep.rhs = w * l;
  rep.terms.push_back(Term{vertex, w, l, rep.rhs});
  rep.slack = rep.lhs - rep.rhs;
  return rep;
}

InequalityReport evaluate(const Triangle& t, Point2 m, double eps) {
  const Region region = classify(t, m, eps);
  if (const int v = vertex_index(region); v >= 0) return vertex_report(t, m, v);
  InequalityReport rep = signed_barrow_report(t, m, eps);
  if (region == Region::Lambda0) rep.id = InequalityId::LuWeighted;
  return rep;
}

}  // namespace barrow
