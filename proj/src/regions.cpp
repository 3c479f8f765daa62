#include "barrow/regions.hpp"

#include <cmath>
#include <stdexcept>

namespace barrow {

int SignTriple::zeros() const {
  int n = 0;
  for (int v : s) n += v == 0;
  return n;
}

int SignTriple::negatives() const {
  int n = 0;
  for (int v : s) n += v < 0;
  return n;
}

namespace {
constexpr std::array<std::string_view, 10> kNames{"lambda0", "mu1", "mu2",     "mu3",     "mu4",
                                                  "mu5",     "mu6", "vertexA", "vertexB", "vertexC"};
}

std::string_view to_string(Region r) { return kNames[static_cast<std::size_t>(r)]; }

std::optional<Region> region_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == s) return static_cast<Region>(i);
  }
  return std::nullopt;
}

bool is_vertex(Region r) {
  return r == Region::VertexA || r == Region::VertexB || r == Region::VertexC;
}

int vertex_index(Region r) {
  switch (r) {
    case Region::VertexA: return 0;
    case Region::VertexB: return 1;
    case Region::VertexC: return 2;
    default: return -1;
  }
}

SignTriple expected_pattern(Region r) {
  switch (r) {
    case Region::Lambda0: return {{1, 1, 1}};
    case Region::Mu1: return {{-1, 1, 1}};
    case Region::Mu2: return {{1, -1, 1}};
    case Region::Mu3: return {{1, 1, -1}};
    case Region::Mu4: return {{1, -1, -1}};
    case Region::Mu5: return {{-1, 1, -1}};
    case Region::Mu6: return {{-1, -1, 1}};
    default: throw std::invalid_argument("vertex regions carry no sign pattern");
  }
}

SignTriple sign_pattern(const BaryCoords& bc, double eps) {
  SignTriple out;
  for (int i = 0; i < 3; ++i) {
    const double x = bc[i];
    out.s[static_cast<std::size_t>(i)] = std::abs(x) <= eps ? 0 : (x > 0 ? 1 : -1);
  }
  return out;
}

Region region_of_pattern(const SignTriple& pattern) {
  SignTriple s = pattern;
  switch (s.zeros()) {
    case 0:
      break;
    case 1: {
      // On a sideline the two remaining coordinates sum to one, so at most
      // one of them is negative.
      const int flip = s.negatives() == 0 ? -1 : 1;
      for (auto& v : s.s) {
        if (v == 0) v = flip;
      }
      break;
    }
    case 2:
      for (int i = 0; i < 3; ++i) {
        if (s[i] != 0) return static_cast<Region>(static_cast<int>(Region::VertexA) + i);
      }
      [[fallthrough]];
    default:
      throw std::invalid_argument("sign pattern with three zeros has no region");
  }

  const int neg = s.negatives();
  if (neg == 0) return Region::Lambda0;
  if (neg == 1) {
    for (int i = 0; i < 3; ++i) {
      if (s[i] < 0) return static_cast<Region>(static_cast<int>(Region::Mu1) + i);
    }
  }
  if (neg == 2) {
    // The positive entry names the vertical-angle region: +u -> Mu4, +v -> Mu5, +w -> Mu6.
    for (int i = 0; i < 3; ++i) {
      if (s[i] > 0) return static_cast<Region>(static_cast<int>(Region::Mu4) + i);
    }
  }
  throw std::invalid_argument("sign pattern (-,-,-) cannot arise from normalized coordinates");
}

Region classify(const Triangle& t, Point2 m, double eps) {
  if (const int v = coincident_vertex(t, m); v >= 0) {
    return static_cast<Region>(static_cast<int>(Region::VertexA) + v);
  }
  return region_of_pattern(sign_pattern(barycentric(t, m), eps));
}

}  // namespace barrow
