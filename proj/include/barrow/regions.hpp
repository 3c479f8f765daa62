#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "barrow/geom.hpp"

namespace barrow {

// Absolute snap threshold applied to normalized barycentric coordinates.
inline constexpr double kDefaultEps = 1e-12;

struct SignTriple {
  std::array<int, 3> s{0, 0, 0};

  int operator[](int i) const { return s[static_cast<std::size_t>(i)]; }
  int zeros() const;
  int negatives() const;
  friend bool operator==(const SignTriple&, const SignTriple&) = default;
};

// The sign regions of the plane cut by the three sidelines.
//
//   Lambda0      (+,+,+)  open interior
//   Mu1/Mu2/Mu3  closures of (-,+,+), (+,-,+), (+,+,-) minus the two
//                vertices of the crossed side
//   Mu4/Mu5/Mu6  open vertical-angle regions (+,-,-), (-,+,-), (-,-,+)
//   VertexA/B/C  the vertices themselves
enum class Region { Lambda0, Mu1, Mu2, Mu3, Mu4, Mu5, Mu6, VertexA, VertexB, VertexC };

inline constexpr std::array<Region, 10> kAllRegions{
    Region::Lambda0, Region::Mu1, Region::Mu2, Region::Mu3,     Region::Mu4,
    Region::Mu5,     Region::Mu6, Region::VertexA, Region::VertexB, Region::VertexC};

std::string_view to_string(Region r);
std::optional<Region> region_from_string(std::string_view s);

bool is_vertex(Region r);
// 0, 1, 2 for VertexA, VertexB, VertexC; -1 otherwise.
int vertex_index(Region r);

// The sign pattern a region's signed bisectors must carry (Lambda0 is
// (+,+,+)). Undefined for vertex labels.
SignTriple expected_pattern(Region r);

SignTriple sign_pattern(const BaryCoords& bc, double eps = kDefaultEps);

// Region of a sign pattern under the boundary tie-break: a single zero is
// flipped toward the sign that leaves exactly one negative entry, which
// selects the unique closed region Mu1..Mu3 containing the point.
Region region_of_pattern(const SignTriple& s);

// Points within kVertexCoincidenceFactor * diameter of a vertex are labeled
// with that vertex; everything else goes through region_of_pattern.
Region classify(const Triangle& t, Point2 m, double eps = kDefaultEps);

}  // namespace barrow
