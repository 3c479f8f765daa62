#include "barrow/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace barrow::io {

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  if (x == std::trunc(x) && std::abs(x) < 0x1.0p53) return static_cast<std::int64_t>(x);
  return x;
}

Json point_json(Point2 p) { return Json::array({number(p.x), number(p.y)}); }

Json classify_json(Region region, const BaryCoords& bc) {
  Json j;
  j["region"] = std::string(to_string(region));
  j["bary"] = Json::array({number(bc.u), number(bc.v), number(bc.w)});
  return j;
}

namespace {

constexpr std::string_view kSides[3] = {"a", "b", "c"};

Json sample_json(const SampleCase& s) {
  Json j;
  j["index"] = s.index;
  j["triangle"] =
      Json::array({point_json(s.triangle[0]), point_json(s.triangle[1]), point_json(s.triangle[2])});
  j["point"] = point_json(s.point);
  return j;
}

}  // namespace

Json report_json(const InequalityReport& r) {
  Json j;
  j["inequality"] = std::string(to_string(r.id));
  j["region"] = std::string(to_string(r.region));
  j["lhs"] = number(r.lhs);
  j["rhs"] = number(r.rhs);
  j["slack"] = number(r.slack);
  Json terms = Json::array();
  for (const Term& t : r.terms) {
    Json term;
    term["side"] = std::string(kSides[t.side]);
    term["weight"] = number(t.weight);
    term["value"] = number(t.value);
    term["contribution"] = number(t.contribution);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json fuzz_json(const FuzzReport& r) {
  Json j;
  j["seed"] = r.seed;
  j["n"] = r.n;
  j["tol_factor"] = number(r.tol_factor);
  j["violation_count"] = r.violation_count;
  j["sign_mismatches"] = r.sign_mismatches;
  j["pattern_mismatches"] = r.pattern_mismatches;
  j["shape_fallbacks"] = r.shape_fallbacks;
  Json regions;
  for (Region reg : kAllRegions) {
    regions[std::string(to_string(reg))] = r.region_counts[static_cast<std::size_t>(reg)];
  }
  j["region_counts"] = std::move(regions);
  Json targets;
  for (int i = 0; i < kNumTargets; ++i) {
    targets[std::string(to_string(static_cast<SampleTarget>(i)))] =
        r.target_counts[static_cast<std::size_t>(i)];
  }
  j["target_counts"] = std::move(targets);
  Json cells = Json::array();
  for (const CellStats& c : r.cells) {
    Json cell;
    cell["inequality"] = std::string(to_string(c.id));
    cell["region"] = std::string(to_string(c.region));
    cell["count"] = c.count;
    cell["violations"] = c.violation_count;
    cell["min_relative_slack"] = number(c.min_relative_slack);
    cell["min_slack"] = number(c.min_slack);
    cell["argmin"] = sample_json(c.argmin);
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  Json violations = Json::array();
  for (const Violation& v : r.violations) {
    Json item;
    item["inequality"] = std::string(to_string(v.id));
    item["region"] = std::string(to_string(v.region));
    item["slack"] = number(v.slack);
    item["scale"] = number(v.scale);
    item["sample"] = sample_json(v.sample);
    violations.push_back(std::move(item));
  }
  j["violations"] = std::move(violations);
  return j;
}

Json tightness_json(const TightnessResult& r) {
  Json j;
  j["point"] = point_json(r.point);
  j["slack"] = number(r.slack);
  return j;
}

Json scan_json(const ScanGrid& grid) {
  Json j;
  j["bbox"] = Json::array(
      {number(grid.bbox.x0), number(grid.bbox.y0), number(grid.bbox.x1), number(grid.bbox.y1)});
  j["resolution"] = grid.resolution;
  Json rows = Json::array();
  for (const ScanRow& r : grid.rows) {
    rows.push_back(Json::array({number(r.x), number(r.y), std::string(to_string(r.region)),
                                number(r.ra), number(r.rb), number(r.rc), number(r.lpa),
                                number(r.lpb), number(r.lpc), number(r.lhs), number(r.rhs),
                                number(r.slack)}));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string dump_line(const Json& j) { return j.dump() + "\n"; }

std::string format_csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_scan_csv(std::ostream& out, const ScanGrid& grid) {
  out << kScanCsvHeader << '\n';
  for (const ScanRow& r : grid.rows) {
    out << format_csv_number(r.x) << ',' << format_csv_number(r.y) << ',' << to_string(r.region);
    for (double v : {r.ra, r.rb, r.rc, r.lpa, r.lpb, r.lpc, r.lhs, r.rhs, r.slack}) {
      out << ',' << format_csv_number(v);
    }
    out << '\n';
  }
}

namespace {

double parse_double(std::string_view field) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::runtime_error("malformed CSV number '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

std::vector<ScanRow> read_scan_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kScanCsvHeader) {
    throw std::runtime_error("CSV header mismatch");
  }
  std::vector<ScanRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::string_view rest(line);
    for (;;) {
      const auto comma = rest.find(',');
      f.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (f.size() != 12) throw std::runtime_error("CSV row must have 12 fields");
    const auto region = region_from_string(f[2]);
    if (!region) throw std::runtime_error("unknown region '" + std::string(f[2]) + "'");
    ScanRow r;
    r.x = parse_double(f[0]);
    r.y = parse_double(f[1]);
    r.region = *region;
    double* dst[9] = {&r.ra, &r.rb, &r.rc, &r.lpa, &r.lpb, &r.lpc, &r.lhs, &r.rhs, &r.slack};
    for (int k = 0; k < 9; ++k) *dst[k] = parse_double(f[static_cast<std::size_t>(k) + 3]);
    rows.push_back(r);
  }
  return rows;
}

std::string_view region_color(Region r) {
  switch (r) {
    case Region::Lambda0: return "#4daf4a";
    case Region::Mu1: return "#377eb8";
    case Region::Mu2: return "#ff7f00";
    case Region::Mu3: return "#984ea3";
    case Region::Mu4: return "#a6cee3";
    case Region::Mu5: return "#fdbf6f";
    case Region::Mu6: return "#cab2d6";
    case Region::VertexA: return "#e41a1c";
    case Region::VertexB: return "#a65628";
    case Region::VertexC: return "#f781bf";
  }
  return "#000000";
}

namespace {

std::string fixed(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

// Linear ramp from #440154 (t = 0) to #fde725 (t = 1).
std::string ramp_color(double t) {
  t = std::clamp(t, 0.0, 1.0);
  auto lerp = [t](int a, int b) { return static_cast<int>(std::lround(a + (b - a) * t)); };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", lerp(0x44, 0xfd), lerp(0x01, 0xe7),
                lerp(0x54, 0x25));
  return buf;
}

}  // namespace

void write_svg(std::ostream& out, const Triangle& t, const ScanGrid& grid,
               const SvgOptions& options) {
  const int res = grid.resolution;
  const double cw = static_cast<double>(options.width) / res;
  const double ch = static_cast<double>(options.height) / res;
  const BBox& bb = grid.bbox;
  auto px = [&](Point2 p) {
    return Point2{(p.x - bb.x0) / (bb.x1 - bb.x0) * options.width,
                  (bb.y1 - p.y) / (bb.y1 - bb.y0) * options.height};
  };

  double lo = 0.0, hi = 0.0;
  if (!grid.rows.empty()) {
    lo = hi = grid.rows.front().slack;
    for (const ScanRow& r : grid.rows) {
      lo = std::min(lo, r.slack);
      hi = std::max(hi, r.slack);
    }
  }
  auto cell_color = [&](const ScanRow& r) -> std::string {
    if (options.layer == SvgLayer::Regions) return std::string(region_color(r.region));
    return ramp_color(hi > lo ? (r.slack - lo) / (hi - lo) : 0.0);
  };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width
      << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << ' '
      << options.height << "\">\n";
  out << "<g shape-rendering=\"crispEdges\" stroke=\"none\">\n";
  for (int j = 0; j < res; ++j) {
    const double y = (res - 1 - j) * ch;
    int i = 0;
    while (i < res) {
      const std::string color = cell_color(grid.rows[static_cast<std::size_t>(j * res + i)]);
      int run = 1;
      while (i + run < res &&
             cell_color(grid.rows[static_cast<std::size_t>(j * res + i + run)]) == color) {
        ++run;
      }
      out << "<rect x=\"" << fixed(i * cw) << "\" y=\"" << fixed(y) << "\" width=\""
          << fixed(run * cw) << "\" height=\"" << fixed(ch) << "\" fill=\"" << color << "\"/>\n";
      i += run;
    }
  }
  out << "</g>\n";

  const Point2 a = px(t.A()), b = px(t.B()), c = px(t.C());
  out << "<polygon points=\"" << fixed(a.x) << ',' << fixed(a.y) << ' ' << fixed(b.x) << ','
      << fixed(b.y) << ' ' << fixed(c.x) << ',' << fixed(c.y)
      << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
  const Region markers[3] = {Region::VertexA, Region::VertexB, Region::VertexC};
  for (int k = 0; k < 3; ++k) {
    const Point2 p = px(t.vertex(k));
    out << "<circle cx=\"" << fixed(p.x) << "\" cy=\"" << fixed(p.y) << "\" r=\"4\" fill=\""
        << region_color(markers[k]) << "\" stroke=\"#000000\" stroke-width=\"0.5\"/>\n";
  }
  if (options.layer == SvgLayer::Slack) {
    out << "<text x=\"4\" y=\"14\" font-family=\"monospace\" font-size=\"11\" fill=\"#000000\">"
        << "slack " << format_csv_number(lo) << " .. " << format_csv_number(hi) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace barrow::io
