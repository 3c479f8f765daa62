#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "barrow/geom.hpp"
#include "barrow/inequalities.hpp"
#include "barrow/regions.hpp"

namespace barrow {

// Deterministic stream of doubles. Sample i of a run with seed s draws from
// stream_for(s, i), so results never depend on scheduling.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t state) : engine_(state) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits; identical on every platform.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // 10^uniform(lo_exp, hi_exp).
  double log_uniform(double lo_exp, double hi_exp);

 private:
  std::mt19937_64 engine_;
};

RandomStream stream_for(std::uint64_t seed, std::uint64_t index);

enum class TriangleShape { Random, NearDegenerate, EquilateralPerturbed, Mixed };

std::string_view to_string(TriangleShape s);
std::optional<TriangleShape> shape_from_string(std::string_view s);

// Sampling strata: the seven open regions, points on a sideline (open side
// or extension ray), and the near-vertex band.
enum class SampleTarget { Lambda0, Mu1, Mu2, Mu3, Mu4, Mu5, Mu6, Sideline, NearVertex };
inline constexpr int kNumTargets = 9;

std::string_view to_string(SampleTarget t);
std::optional<SampleTarget> target_from_string(std::string_view s);

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Default perturbation for EquilateralPerturbed, as a fraction of the
// circumradius.
inline constexpr double kDefaultPerturbation = 0.05;

// Non-degenerate triangle of the requested shape under a random similarity.
// NearDegenerate keeps |area| >= 10 * kDegenerateAreaFactor * diameter^2.
// Mixed picks Random / NearDegenerate / EquilateralPerturbed as 2 : 1 : 1.
Triangle sample_triangle(RandomStream& rng, TriangleShape shape,
                         double perturbation = kDefaultPerturbation);

// Near-vertex samples land at distance [1e-10, 1e-6] * diameter from a vertex.
inline constexpr double kNearVertexMinExp = -10.0;
inline constexpr double kNearVertexMaxExp = -6.0;

// A point that classifies into `target` (for Sideline: one coordinate within
// eps; for NearVertex: inside the band and not labeled as a vertex). Built
// in barycentric space and checked; throws SamplingError after bounded
// retries, which only happens for sidelines of extremely thin triangles.
Point2 sample_point(RandomStream& rng, const Triangle& t, SampleTarget target,
                    double eps = kDefaultEps);

// Whether `m` satisfies the sample_point contract for `target`.
bool satisfies_target(const Triangle& t, Point2 m, SampleTarget target, double eps = kDefaultEps);

struct RegionMix {
  std::array<double, kNumTargets> weights{};

  static RegionMix uniform();
  static RegionMix only(SampleTarget t);
  // Throws std::invalid_argument unless weights are >= 0 and sum to 1 (1e-9).
  void validate() const;
  SampleTarget pick(double u) const;
};

struct FuzzConfig {
  std::uint64_t n = 100000;
  std::uint64_t seed = 42;
  double tol_factor = kDefaultTolFactor;
  double eps = kDefaultEps;
  RegionMix mix = RegionMix::uniform();
  TriangleShape shape = TriangleShape::Mixed;
  double perturbation = kDefaultPerturbation;
  // 0 means std::thread::hardware_concurrency(). Never affects the report.
  unsigned workers = 1;
};

struct SampleCase {
  std::uint64_t index = 0;
  std::array<Point2, 3> triangle{};
  Point2 point{};
};

struct CellStats {
  InequalityId id{};
  Region region{};
  std::uint64_t count = 0;
  std::uint64_t violation_count = 0;
  // Minimum of slack / (R_A + R_B + R_C) and the sample attaining it.
  double min_relative_slack = 0.0;
  double min_slack = 0.0;
  SampleCase argmin;
};

struct Violation {
  InequalityId id{};
  Region region{};
  double slack = 0.0;
  double scale = 0.0;
  SampleCase sample;
};

struct FuzzReport {
  std::uint64_t seed = 0;
  std::uint64_t n = 0;
  double tol_factor = 0.0;
  std::vector<CellStats> cells;  // sorted by (inequality, region)
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;  // first kMaxRecordedViolations by index
  std::array<std::uint64_t, 10> region_counts{};
  std::array<std::uint64_t, kNumTargets> target_counts{};
  // Triangles redrawn as Random because the configured shape could not host
  // the target stratum.
  std::uint64_t shape_fallbacks = 0;
  // sign(l'_x) != sign(coordinate) for an unsnapped coordinate.
  std::uint64_t sign_mismatches = 0;
  // Term sign pattern of evaluate() differs from the region's pattern at a
  // point with no snapped coordinate.
  std::uint64_t pattern_mismatches = 0;
};

inline constexpr std::size_t kMaxRecordedViolations = 32;

// Regenerates the (triangle, point) of sample `index`, exactly as fuzz does.
SampleCase fuzz_case(const FuzzConfig& config, std::uint64_t index, SampleTarget* target = nullptr,
                     bool* fell_back = nullptr);

FuzzReport fuzz(const FuzzConfig& config);

// ---------------------------------------------------------------------------
// Tightness search.
// ---------------------------------------------------------------------------

struct TightnessOptions {
  int starts = 16;
  std::uint64_t seed = 1;
  // Confine starts and the objective to one region.
  std::optional<Region> region;
  int max_iterations = 500;
  double step_tolerance = 1e-10;  // times the diameter
  double eps = kDefaultEps;
};

struct TightnessResult {
  Point2 point{};
  double slack = 0.0;
  Region region = Region::Lambda0;
  int best_start = -1;
};

// Multi-start Nelder-Mead minimization of the slack of `id` over M.
// Interior-only inequalities (barrow, erdos-mordell, lu) are confined to
// Lambda0. Throws DomainError for the vertex-only inequalities.
TightnessResult tightness_search(const Triangle& t, InequalityId id,
                                 const TightnessOptions& options = {});

// Slack of `id` at m; throws when m is outside the inequality's domain.
InequalityReport report_for(const Triangle& t, Point2 m, InequalityId id, double eps = kDefaultEps);

// ---------------------------------------------------------------------------
// Grid scan.
// ---------------------------------------------------------------------------

struct BBox {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 1.0;
  double y1 = 1.0;
};

// Bounding box of the triangle grown by `margin` * diameter on every side.
BBox triangle_bbox(const Triangle& t, double margin = 0.0);

struct ScanRow {
  double x = 0.0;
  double y = 0.0;
  Region region = Region::Lambda0;
  double ra = 0.0, rb = 0.0, rc = 0.0;
  double lpa = 0.0, lpb = 0.0, lpc = 0.0;
  double lhs = 0.0, rhs = 0.0, slack = 0.0;
};

struct ScanGrid {
  BBox bbox;
  int resolution = 0;
  std::vector<ScanRow> rows;  // row-major, y ascending then x ascending
};

// Evaluates classify + evaluate at the resolution^2 cell centers. Vertex
// cells use the reduced inequality; their two undefined l' values are 0
// (the point lies on both adjacent sides).
ScanGrid grid_scan(const Triangle& t, const BBox& bbox, int resolution, double eps = kDefaultEps);

}  // namespace barrow
