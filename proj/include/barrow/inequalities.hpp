#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "barrow/bisectors.hpp"
#include "barrow/geom.hpp"
#include "barrow/regions.hpp"

namespace barrow {

// ---------------------------------------------------------------------------
// Raw algebraic inequalities in (p, q, r, beta, gamma).
//
//   S1: alpha = pi - beta - gamma,
//       p + q + r >= 2 sqrt(qr) cos a + 2 sqrt(pr) cos b + 2 sqrt(pq) cos g
//   S2: alpha = beta + gamma,
//       p + q + r >= -2 sqrt(qr) cos a + 2 sqrt(pr) cos b + 2 sqrt(pq) cos g
//   S3: alpha = beta + gamma,
//       p + q + r >= 2 sqrt(qr) cos a - 2 sqrt(pr) cos b - 2 sqrt(pq) cos g
// ---------------------------------------------------------------------------

enum class Statement { S1, S2, S3 };

// LHS - RHS. Throws DomainError for negative p, q, r, negative angles, or
// beta + gamma > pi.
double stmt_slack(Statement kind, double p, double q, double r, double beta, double gamma);

// Absolute differences between direct expressions and their sum-of-squares
// forms, with gamma = alpha - beta:
//   lagrange      S2 slack vs (sqrt r - sqrt p cos b + sqrt q cos a)^2 + (sqrt p sin b - sqrt q sin a)^2
//   case1         S3 slack vs the cos(alpha) <= 0 form (zero when cos(alpha) > 0)
//   case2         S3 slack vs the cos(alpha) > 0 form (zero when cos(alpha) <= 0)
//   discriminant  direct quarter-discriminant times 4 vs -4 (sqrt r sin b - sqrt q sin g)^2
struct IdentityResiduals {
  double lagrange = 0.0;
  double case1 = 0.0;
  double case2 = 0.0;
  double discriminant = 0.0;

  double max() const;
};

// Requires p, q, r >= 0 and 0 <= beta <= alpha <= pi.
IdentityResiduals identity_residuals(double p, double q, double r, double beta, double alpha);

// ---------------------------------------------------------------------------
// Geometric reports.
// ---------------------------------------------------------------------------

// Each weight has the form t + 1/t with t > 0, hence is at least 2.
struct WeightTriple {
  double wa = 0.0;
  double wb = 0.0;
  double wc = 0.0;

  double operator[](int i) const { return i == 0 ? wa : (i == 1 ? wb : wc); }
};

// wa = sqrt(Rc/Rb) + sqrt(Rb/Rc), wb = sqrt(Rc/Ra) + sqrt(Ra/Rc),
// wc = sqrt(Ra/Rb) + sqrt(Rb/Ra). Throws VertexCoincidence if any R is 0.
WeightTriple lu_weights(const DistanceTriple& r);

// Weights c/b + b/c, c/a + a/c, a/b + b/a of the signed-distance inequality.
WeightTriple side_weights(const Triangle& t);

enum class InequalityId {
  Barrow,
  ErdosMordell,
  Dergiades,
  LuWeighted,
  SignedBarrow,
  VertexA,
  VertexB,
  VertexC,
};

std::string_view to_string(InequalityId id);
std::optional<InequalityId> inequality_from_string(std::string_view s);

// One summand of an RHS: contribution = weight * value. `side` is 0, 1, 2
// for the a, b, c term.
struct Term {
  int side = 0;
  double weight = 0.0;
  double value = 0.0;
  double contribution = 0.0;
};

struct InequalityReport {
  InequalityId id = InequalityId::SignedBarrow;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  Region region = Region::Lambda0;
  std::vector<Term> terms;
  // R_A + R_B + R_C at the evaluated point; the scale for tolerances.
  double scale = 0.0;
};

inline constexpr double kDefaultTolFactor = 1e-9;

// |slack| <= tol_factor * scale.
bool is_tight(const InequalityReport& r, double tol_factor = kDefaultTolFactor);
// slack < -tol_factor * scale.
bool is_violation(const InequalityReport& r, double tol_factor = kDefaultTolFactor);

// Signs of the term values (the l' factors for bisector reports).
SignTriple term_signs(const InequalityReport& r);

// Signed-distance form, valid for every M: R_A + R_B + R_C >= sum w_x d'_x.
InequalityReport dergiades_report(const Triangle& t, Point2 m, double eps = kDefaultEps);

struct ClassicReports {
  InequalityReport barrow;
  InequalityReport erdos_mordell;
};

// Unweighted forms with RHS 2 (l_a + l_b + l_c) and 2 (r_a + r_b + r_c).
// Throws OutsideInterior unless M classifies as Lambda0.
ClassicReports classic_reports(const Triangle& t, Point2 m, double eps = kDefaultEps);

// Weighted bisector form on the interior. Throws OutsideInterior elsewhere.
InequalityReport lu_report(const Triangle& t, Point2 m, double eps = kDefaultEps);

// Weighted signed-bisector form for any non-vertex M. Throws
// VertexCoincidence at a vertex.
InequalityReport signed_barrow_report(const Triangle& t, Point2 m, double eps = kDefaultEps);

// Reduced two-term inequality at vertex `vertex` (0, 1, 2):
// e.g. at A: R_B + R_C >= (sqrt(Rc/Rb) + sqrt(Rb/Rc)) l_a.
InequalityReport vertex_report(const Triangle& t, Point2 m, int vertex);

// Dispatch on classify(): Lambda0 -> LuWeighted, Mu1..Mu6 ->
// SignedBarrow, vertices -> the matching reduced form.
InequalityReport evaluate(const Triangle& t, Point2 m, double eps = kDefaultEps);

}  // namespace barrow
