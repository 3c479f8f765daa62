#include "barrow/cli.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "barrow/errors.hpp"
#include "barrow/inequalities.hpp"
#include "barrow/io.hpp"
#include "barrow/regions.hpp"

namespace barrow::cli {

namespace {

std::vector<double> parse_numbers(std::string_view text, char sep, std::size_t expected,
                                  std::string_view what) {
  std::vector<double> out;
  std::string_view rest = text;
  for (;;) {
    const auto pos = rest.find(sep);
    std::string_view field = rest.substr(0, pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() ||
        !std::isfinite(v)) {
      throw UsageError("malformed " + std::string(what) + " '" + std::string(text) + "'");
    }
    out.push_back(v);
    if (pos == std::string_view::npos) break;
    rest.remove_prefix(pos + 1);
  }
  if (out.size() != expected) {
    throw UsageError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return out;
}

}  // namespace

Point2 parse_point(std::string_view text) {
  const auto v = parse_numbers(text, ',', 2, "point");
  return Point2{v[0], v[1]};
}

Triangle parse_triangle(std::string_view text) {
  Point2 p[3];
  std::string_view rest = text;
  for (int i = 0; i < 3; ++i) {
    const auto pos = rest.find(';');
    if ((i < 2) == (pos == std::string_view::npos)) {
      throw UsageError("triangle must look like \"ax,ay;bx,by;cx,cy\"");
    }
    p[i] = parse_point(rest.substr(0, pos));
    if (pos != std::string_view::npos) rest.remove_prefix(pos + 1);
  }
  return Triangle(p[0], p[1], p[2]);
}

BBox parse_bbox(std::string_view text) {
  const auto v = parse_numbers(text, ',', 4, "bbox");
  return BBox{v[0], v[1], v[2], v[3]};
}

namespace {

struct Common {
  double eps = kDefaultEps;
  double tol = kDefaultTolFactor;
  std::string json_path;
};

void add_eps(CLI::App* app, Common& c) {
  app->add_option("--eps", c.eps, "snap threshold for normalized barycentric coordinates")
      ->check(CLI::NonNegativeNumber);
}
void add_tol(CLI::App* app, Common& c) {
  app->add_option("--tol", c.tol, "violation tolerance factor (times R_A + R_B + R_C)")
      ->check(CLI::NonNegativeNumber);
}
void add_json(CLI::App* app, Common& c) {
  app->add_option("--json", c.json_path, "also write the JSON output to this file");
}

void emit(std::ostream& out, const Common& c, const io::Json& j) {
  const std::string line = io::dump_line(j);
  out << line;
  if (!c.json_path.empty()) {
    std::ofstream f(c.json_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + c.json_path);
    f << line;
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed-bisector Barrow inequality toolkit", "barrow"};
  app.require_subcommand(1);

  Common common;
  std::string triangle_text, point_text, inequality = "signed-barrow";

  auto* classify_cmd = app.add_subcommand("classify", "region label and barycentric coordinates");
  classify_cmd->add_option("--triangle", triangle_text, "\"ax,ay;bx,by;cx,cy\"")->required();
  classify_cmd->add_option("--point", point_text, "\"x,y\"")->required();
  add_eps(classify_cmd, common);
  add_json(classify_cmd, common);

  auto* eval_cmd = app.add_subcommand("eval", "inequality report at one point");
  eval_cmd->add_option("--triangle", triangle_text, "\"ax,ay;bx,by;cx,cy\"")->required();
  eval_cmd->add_option("--point", point_text, "\"x,y\"")->required();
  eval_cmd->add_option("--inequality", inequality, "which inequality to evaluate")
      ->check(CLI::IsMember({"signed-barrow", "barrow", "erdos-mordell", "dergiades", "lu"}));
  add_eps(eval_cmd, common);
  add_tol(eval_cmd, common);
  add_json(eval_cmd, common);

  FuzzConfig fuzz_config;
  std::string shape_text = "mixed", region_text;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "seeded stratified verification run");
  fuzz_cmd->add_option("--n", fuzz_config.n, "number of samples")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--seed", fuzz_config.seed, "base seed");
  fuzz_cmd->add_option("--workers", fuzz_config.workers, "worker threads (0 = all cores)");
  fuzz_cmd->add_option("--shape", shape_text, "triangle family")
      ->check(CLI::IsMember({"random", "near-degenerate", "equilateral-perturbed", "mixed"}));
  fuzz_cmd->add_option("--region", region_text, "put all samples in one stratum")
      ->check(CLI::IsMember({"lambda0", "mu1", "mu2", "mu3", "mu4", "mu5", "mu6", "sideline",
                             "near-vertex"}));
  add_eps(fuzz_cmd, common);
  add_tol(fuzz_cmd, common);
  add_json(fuzz_cmd, common);

  std::string bbox_text, svg_path, svg_slack_path, out_path;
  int resolution = 200;
  int svg_size = 512;
  auto* scan_cmd = app.add_subcommand("scan", "grid of regions and slacks as CSV");
  scan_cmd->add_option("--triangle", triangle_text, "\"ax,ay;bx,by;cx,cy\"")->required();
  scan_cmd->add_option("--bbox", bbox_text, "\"x0,y0,x1,y1\" (default: triangle box + 50%)");
  scan_cmd->add_option("--resolution", resolution, "cells per axis")->check(CLI::Range(2, 20000));
  scan_cmd->add_option("--out", out_path, "write the CSV here instead of stdout");
  scan_cmd->add_option("--svg", svg_path, "region map SVG output");
  scan_cmd->add_option("--svg-slack", svg_slack_path, "slack heatmap SVG output");
  scan_cmd->add_option("--svg-size", svg_size, "SVG width and height in pixels")
      ->check(CLI::Range(16, 16384));
  add_eps(scan_cmd, common);
  add_json(scan_cmd, common);

  TightnessOptions tight;
  std::string tight_inequality = "barrow", tight_region;
  auto* tighten_cmd = app.add_subcommand("tighten", "multi-start search for the smallest slack");
  tighten_cmd->add_option("--triangle", triangle_text, "\"ax,ay;bx,by;cx,cy\"")->required();
  tighten_cmd->add_option("--inequality", tight_inequality, "which inequality to minimize")
      ->check(CLI::IsMember({"signed-barrow", "barrow", "erdos-mordell", "dergiades", "lu"}));
  tighten_cmd->add_option("--starts", tight.starts, "number of starts")->check(CLI::PositiveNumber);
  tighten_cmd->add_option("--seed", tight.seed, "seed for start points");
  tighten_cmd->add_option("--region", tight_region, "confine the search to one region")
      ->check(CLI::IsMember({"lambda0", "mu1", "mu2", "mu3", "mu4", "mu5", "mu6"}));
  add_eps(tighten_cmd, common);
  add_tol(tighten_cmd, common);
  add_json(tighten_cmd, common);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) {
      const Triangle t = parse_triangle(triangle_text);
      const Point2 m = parse_point(point_text);
      emit(out, common, io::classify_json(classify(t, m, common.eps), barycentric(t, m)));
      return kExitOk;
    }

    if (eval_cmd->parsed()) {
      const Triangle t = parse_triangle(triangle_text);
      const Point2 m = parse_point(point_text);
      InequalityReport rep;
      if (inequality == "signed-barrow") {
        rep = evaluate(t, m, common.eps);
      } else {
        rep = report_for(t, m, *inequality_from_string(inequality), common.eps);
      }
      emit(out, common, io::report_json(rep));
      return is_violation(rep, common.tol) ? kExitViolation : kExitOk;
    }

    if (fuzz_cmd->parsed()) {
      fuzz_config.tol_factor = common.tol;
      fuzz_config.eps = common.eps;
      fuzz_config.shape = *shape_from_string(shape_text);
      if (!region_text.empty()) fuzz_config.mix = RegionMix::only(*target_from_string(region_text));
      const FuzzReport report = fuzz(fuzz_config);
      const io::Json j = io::fuzz_json(report);
      emit(out, common, j);
      if (report.violation_count == 0) return kExitOk;
      io::Json counterexample;
      counterexample["counterexample"] = j["violations"][0];
      out << io::dump_line(counterexample);
      return kExitViolation;
    }

    if (scan_cmd->parsed()) {
      const Triangle t = parse_triangle(triangle_text);
      const BBox bbox = bbox_text.empty() ? triangle_bbox(t, 0.5) : parse_bbox(bbox_text);
      const ScanGrid grid = grid_scan(t, bbox, resolution, common.eps);
      std::ostringstream csv;
      io::write_scan_csv(csv, grid);
      if (out_path.empty()) {
        out << csv.str();
      } else {
        write_file(out_path, csv.str());
      }
      if (!svg_path.empty()) {
        std::ostringstream svg;
        io::write_svg(svg, t, grid, {svg_size, svg_size, io::SvgLayer::Regions});
        write_file(svg_path, svg.str());
      }
      if (!svg_slack_path.empty()) {
        std::ostringstream svg;
        io::write_svg(svg, t, grid, {svg_size, svg_size, io::SvgLayer::Slack});
        write_file(svg_slack_path, svg.str());
      }
      if (!common.json_path.empty()) write_file(common.json_path, io::dump_line(io::scan_json(grid)));
      return kExitOk;
    }

    if (tighten_cmd->parsed()) {
      const Triangle t = parse_triangle(triangle_text);
      const InequalityId id = *inequality_from_string(tight_inequality);
      tight.eps = common.eps;
      if (!tight_region.empty()) tight.region = region_from_string(tight_region);
      const TightnessResult result = tightness_search(t, id, tight);
      emit(out, common, io::tightness_json(result));
      const InequalityReport rep = report_for(t, result.point, id, common.eps);
      return is_violation(rep, common.tol) ? kExitViolation : kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const SamplingError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace barrow::cli
