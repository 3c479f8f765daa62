#pragma once

#include <array>
#include <cmath>

namespace barrow {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 p, Point2 q) { return {p.x + q.x, p.y + q.y}; }
  friend constexpr Point2 operator-(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }
  friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend constexpr Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }
  friend constexpr Point2 operator/(Point2 p, double s) { return {p.x / s, p.y / s}; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Point2 p, Point2 q) { return p.x * q.x + p.y * q.y; }
constexpr double cross(Point2 p, Point2 q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 p, Point2 q) { return norm(q - p); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// ((Q - P) x (R - P)) / 2; positive iff P, Q, R are counterclockwise.
double signed_area(Point2 p, Point2 q, Point2 r);

enum class Orientation { CounterClockwise, Clockwise };

// Relative degeneracy threshold: |area| <= kDegenerateAreaFactor * diameter^2
// is rejected. The same factor scales the vertex coincidence radius.
inline constexpr double kDegenerateAreaFactor = 1e-12;
inline constexpr double kVertexCoincidenceFactor = 1e-12;

// A validated, non-degenerate triangle. Side lengths follow the usual
// convention a = |BC|, b = |CA|, c = |AB|.
class Triangle {
 public:
  // Throws DegenerateTriangle on non-finite or (nearly) collinear vertices.
  Triangle(Point2 a, Point2 b, Point2 c);

  Point2 A() const { return vertices_[0]; }
  Point2 B() const { return vertices_[1]; }
  Point2 C() const { return vertices_[2]; }
  Point2 vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  const std::array<Point2, 3>& vertices() const { return vertices_; }

  double a() const { return sides_[0]; }
  double b() const { return sides_[1]; }
  double c() const { return sides_[2]; }
  double side(int i) const { return sides_[static_cast<std::size_t>(i)]; }

  double signed_area() const { return area_; }
  double area() const { return std::abs(area_); }
  double diameter() const { return diameter_; }
  Orientation orientation() const {
    return area_ > 0 ? Orientation::CounterClockwise : Orientation::Clockwise;
  }

  // Similarity image: p -> scale * R(angle) p + shift.
  Triangle transformed(double scale, double angle, Point2 shift) const;

 private:
  std::array<Point2, 3> vertices_;
  std::array<double, 3> sides_;
  double area_;
  double diameter_;
};

// Applies the same similarity as Triangle::transformed to a single point.
Point2 similarity(Point2 p, double scale, double angle, Point2 shift);

// Normalized affine barycentric coordinates (u + v + w = 1).
struct BaryCoords {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;

  double operator[](int i) const { return i == 0 ? u : (i == 1 ? v : w); }
};

struct DistanceTriple {
  double ra = 0.0;
  double rb = 0.0;
  double rc = 0.0;

  double operator[](int i) const { return i == 0 ? ra : (i == 1 ? rb : rc); }
  double sum() const { return ra + rb + rc; }
};

// d'_a is the distance of M to line BC, positive on A's side (cyclically).
struct SignedDistanceTriple {
  double da = 0.0;
  double db = 0.0;
  double dc = 0.0;

  double operator[](int i) const { return i == 0 ? da : (i == 1 ? db : dc); }
};

// Signed-area ratios: u = [MBC]/[ABC], v = [AMC]/[ABC], w = [ABM]/[ABC].
BaryCoords barycentric(const Triangle& t, Point2 m);

Point2 from_barycentric(const Triangle& t, const BaryCoords& bc);

DistanceTriple vertex_distances(const Triangle& t, Point2 m);

SignedDistanceTriple signed_distances(const Triangle& t, Point2 m);

// Index of the vertex within kVertexCoincidenceFactor * diameter of m, or -1.
int coincident_vertex(const Triangle& t, Point2 m);

}  // namespace barrow
