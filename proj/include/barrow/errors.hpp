#pragma once

#include <stdexcept>
#include <string>

namespace barrow {

// Base of everything the library throws for invalid geometric input.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateTriangle : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// Raised when M coincides with a vertex; `vertex()` is 'A', 'B' or 'C'.
class VertexCoincidence : public GeometryError {
 public:
  VertexCoincidence(char vertex, const std::string& what)
      : GeometryError(what), vertex_(vertex) {}
  char vertex() const noexcept { return vertex_; }

 private:
  char vertex_;
};

class CollinearInput : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class DomainError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class OutsideInterior : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

}  // namespace barrow
