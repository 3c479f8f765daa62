#include "barrow/geom.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "barrow/errors.hpp"

namespace barrow {

// Extended precision keeps sub-areas of thin or distant configurations
// accurate to well below double rounding of the inputs.
double signed_area(Point2 p, Point2 q, Point2 r) {
  using ld = long double;
  const ld qx = static_cast<ld>(q.x) - p.x, qy = static_cast<ld>(q.y) - p.y;
  const ld rx = static_cast<ld>(r.x) - p.x, ry = static_cast<ld>(r.y) - p.y;
  return static_cast<double>((qx * ry - qy * rx) / 2);
}

Triangle::Triangle(Point2 a, Point2 b, Point2 c) : vertices_{a, b, c} {
  if (!is_finite(a) || !is_finite(b) || !is_finite(c)) {
    throw DegenerateTriangle("triangle has non-finite vertex coordinates");
  }
  sides_ = {distance(b, c), distance(c, a), distance(a, b)};
  diameter_ = std::max({sides_[0], sides_[1], sides_[2]});
  area_ = barrow::signed_area(a, b, c);
  if (!(diameter_ > 0.0) ||
      std::abs(area_) <= kDegenerateAreaFactor * diameter_ * diameter_) {
    throw DegenerateTriangle("triangle is degenerate (|area| = " + std::to_string(std::abs(area_)) +
                             ", diameter = " + std::to_string(diameter_) + ")");
  }
}

Point2 similarity(Point2 p, double scale, double angle, Point2 shift) {
  const double cs = std::cos(angle);
  const double sn = std::sin(angle);
  return Point2{scale * (cs * p.x - sn * p.y), scale * (sn * p.x + cs * p.y)} + shift;
}

Triangle Triangle::transformed(double scale, double angle, Point2 shift) const {
  return Triangle(similarity(A(), scale, angle, shift), similarity(B(), scale, angle, shift),
                  similarity(C(), scale, angle, shift));
}

BaryCoords barycentric(const Triangle& t, Point2 m) {
  const double total = t.signed_area();
  return BaryCoords{signed_area(m, t.B(), t.C()) / total, signed_area(t.A(), m, t.C()) / total,
                    signed_area(t.A(), t.B(), m) / total};
}

Point2 from_barycentric(const Triangle& t, const BaryCoords& bc) {
  return bc.u * t.A() + bc.v * t.B() + bc.w * t.C();
}

DistanceTriple vertex_distances(const Triangle& t, Point2 m) {
  return DistanceTriple{distance(m, t.A()), distance(m, t.B()), distance(m, t.C())};
}

SignedDistanceTriple signed_distances(const Triangle& t, Point2 m) {
  // Twice the sub-area over the side length, oriented so that the opposite
  // vertex is on the positive side.
  const double orient = t.signed_area() > 0 ? 1.0 : -1.0;
  return SignedDistanceTriple{orient * 2.0 * signed_area(m, t.B(), t.C()) / t.a(),
                              orient * 2.0 * signed_area(t.A(), m, t.C()) / t.b(),
                              orient * 2.0 * signed_area(t.A(), t.B(), m) / t.c()};
}

int coincident_vertex(const Triangle& t, Point2 m) {
  const double radius = kVertexCoincidenceFactor * t.diameter();
  for (int i = 0; i < 3; ++i) {
    if (distance(m, t.vertex(i)) <= radius) return i;
  }
  return -1;
}

}  // namespace barrow
