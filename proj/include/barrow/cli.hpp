#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "barrow/geom.hpp"
#include "barrow/harness.hpp"

namespace barrow::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "ax,ay;bx,by;cx,cy". Throws UsageError on malformed text; the triangle
// itself may still throw DegenerateTriangle.
Triangle parse_triangle(std::string_view text);
// "x,y".
Point2 parse_point(std::string_view text);
// "x0,y0,x1,y1".
BBox parse_bbox(std::string_view text);

// Runs one invocation (args exclude the program name). Everything meant for
// stdout goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace barrow::cli
