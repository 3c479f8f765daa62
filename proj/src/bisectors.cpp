#include "barrow/bisectors.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "barrow/errors.hpp"

namespace barrow {

namespace {

constexpr char kVertexNames[3] = {'A', 'B', 'C'};

void require_off_vertices(const Triangle& t, Point2 m) {
  if (const int v = coincident_vertex(t, m); v >= 0) {
    throw VertexCoincidence(kVertexNames[v],
                            std::string("point coincides with vertex ") + kVertexNames[v]);
  }
}

void require_distinct(Point2 m, Point2 b, Point2 c) {
  const double scale = std::max({distance(b, c), distance(m, b), distance(m, c)});
  const double radius = kVertexCoincidenceFactor * scale;
  if (distance(m, b) <= radius) throw VertexCoincidence('B', "point coincides with B");
  if (distance(m, c) <= radius) throw VertexCoincidence('C', "point coincides with C");
}

// cos(alpha / 2) for alpha = angle BMC. For obtuse alpha the half-angle
// identity 1 + cos(alpha) = cross^2 / (Rb Rc (Rb Rc - dot)) avoids the
// cancellation in Rb Rc + dot.
double half_angle_cosine(Point2 u, Point2 v, double rb, double rc) {
  const double d = dot(u, v);
  const double p = rb * rc;
  if (d >= 0.0) return std::sqrt((p + d) / (2.0 * p));
  return std::abs(cross(u, v)) / std::sqrt(2.0 * p * (p - d));
}

double cosine_form(Point2 m, Point2 b, Point2 c) {
  const Point2 u = b - m;
  const Point2 v = c - m;
  const double rb = norm(u);
  const double rc = norm(v);
  return 2.0 * rb * rc / (rb + rc) * half_angle_cosine(u, v, rb, rc);
}

}  // namespace

double angle_at(Point2 m, Point2 p, Point2 q) {
  const Point2 u = p - m;
  const Point2 v = q - m;
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

ApexAngles apex_angles(const Triangle& t, Point2 m) {
  require_off_vertices(t, m);
  return ApexAngles{angle_at(m, t.B(), t.C()), angle_at(m, t.C(), t.A()),
                    angle_at(m, t.A(), t.B())};
}

BisectorForms bisector_length_forms(Point2 m, Point2 b, Point2 c) {
  require_distinct(m, b, c);
  // (Rb + Rc)^2 - |BC|^2 cancels like (size / distance to BC)^2, so this
  // form is evaluated in quad precision. Differences of doubles are exact.
  using q = __float128;
  const q bx = static_cast<q>(b.x) - m.x, by = static_cast<q>(b.y) - m.y;
  const q cx = static_cast<q>(c.x) - m.x, cy = static_cast<q>(c.y) - m.y;
  const q ex = static_cast<q>(b.x) - c.x, ey = static_cast<q>(b.y) - c.y;
  const q rb = sqrtq(bx * bx + by * by);
  const q rc = sqrtq(cx * cx + cy * cy);
  const q s = rb + rc;
  q disc = s * s - (ex * ex + ey * ey);
  if (disc < 0) disc = 0;
  const q sides = sqrtq(rb * rc) / s * sqrtq(disc);
  return BisectorForms{cosine_form(m, b, c), static_cast<double>(sides)};
}

double collinear_bisector_length(Point2 m, Point2 b, Point2 c) {
  require_distinct(m, b, c);
  const Point2 u = b - m;
  const Point2 v = c - m;
  if (dot(u, v) <= 0.0) return 0.0;
  const double rb = norm(u);
  const double rc = norm(v);
  return 2.0 * rb * rc / (rb + rc);
}

bool on_line(Point2 m, Point2 b, Point2 c) {
  const Point2 u = b - m;
  const Point2 v = c - m;
  const double scale = std::max({norm(u), norm(v), distance(b, c)});
  return std::abs(cross(u, v)) <= 1e-12 * scale * scale;
}

double bisector_length(Point2 m, Point2 b, Point2 c) {
  require_distinct(m, b, c);
  if (on_line(m, b, c)) return collinear_bisector_length(m, b, c);
  return cosine_form(m, b, c);
}

Point2 bisector_foot(Point2 m, Point2 b, Point2 c) {
  require_distinct(m, b, c);
  if (on_line(m, b, c)) throw CollinearInput("bisector foot is undefined for M on line BC");
  const double rb = distance(m, b);
  const double rc = distance(m, c);
  return (rc * b + rb * c) / (rb + rc);
}

BisectorTriple bisectors(const Triangle& t, Point2 m, double eps) {
  const SignedBisectorTriple s = signed_bisectors(t, m, eps);
  return BisectorTriple{std::abs(s.la), std::abs(s.lb), std::abs(s.lc)};
}

SignedBisectorTriple signed_bisectors(const Triangle& t, Point2 m, double eps) {
  require_off_vertices(t, m);
  const BaryCoords bc = barycentric(t, m);
  double out[3];
  for (int i = 0; i < 3; ++i) {
    const Point2 p = t.vertex((i + 1) % 3);
    const Point2 q = t.vertex((i + 2) % 3);
    const double coord = bc[i];
    if (std::abs(coord) <= eps) {
      out[i] = collinear_bisector_length(m, p, q);
    } else {
      const double len = cosine_form(m, p, q);
      out[i] = coord > 0 ? len : -len;
    }
  }
  return SignedBisectorTriple{out[0], out[1], out[2]};
}

}  // namespace barrow
