#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "barrow/geom.hpp"
#include "barrow/harness.hpp"
#include "barrow/inequalities.hpp"
#include "barrow/regions.hpp"

namespace barrow::io {

using Json = nlohmann::ordered_json;

// Integral values are emitted without a fractional part (-3, not -3.0);
// non-finite values become null.
Json number(double x);
Json point_json(Point2 p);

Json classify_json(Region region, const BaryCoords& bc);
Json report_json(const InequalityReport& r);
Json fuzz_json(const FuzzReport& r);
Json tightness_json(const TightnessResult& r);
Json scan_json(const ScanGrid& grid);

// One compact JSON object per line.
std::string dump_line(const Json& j);

inline constexpr std::string_view kScanCsvHeader =
    "x,y,region,R_A,R_B,R_C,lp_a,lp_b,lp_c,lhs,rhs,slack";

// Numbers use 17 significant digits, which round-trips every double.
void write_scan_csv(std::ostream& out, const ScanGrid& grid);
std::string format_csv_number(double x);

// Inverse of write_scan_csv; throws std::runtime_error on malformed input.
std::vector<ScanRow> read_scan_csv(std::istream& in);

// Fixed palette. Regions (fill colors):
//   lambda0 #4daf4a  mu1 #377eb8  mu2 #ff7f00  mu3 #984ea3
//   mu4     #a6cee3  mu5 #fdbf6f  mu6 #cab2d6
// Vertex markers: vertexA #e41a1c  vertexB #a65628  vertexC #f781bf
std::string_view region_color(Region r);

enum class SvgLayer { Regions, Slack };

struct SvgOptions {
  int width = 512;
  int height = 512;
  SvgLayer layer = SvgLayer::Regions;
};

// Static SVG 1.1 map of a scan: one filled cell per row (horizontal runs of
// equal color merged), the triangle outline, and the three vertex markers.
// The slack layer colors cells on a linear ramp over the observed range.
void write_svg(std::ostream& out, const Triangle& t, const ScanGrid& grid,
               const SvgOptions& options = {});

}  // namespace barrow::io
