#include "barrow/harness.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <thread>
#include <utility>

#include "barrow/errors.hpp"

namespace barrow {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxTriangleRetries = 1000;
constexpr int kMaxPointRetries = 64;
constexpr int kMaxShapeAttempts = 8;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int pick_index(RandomStream& rng, int n) {
  return std::min(n - 1, static_cast<int>(rng.uniform() * n));
}

// Random similarity: scale in [1e-2, 1e2], any rotation, shift up to 10x the scale.
Triangle random_placement(RandomStream& rng, Point2 a, Point2 b, Point2 c) {
  const double scale = rng.log_uniform(-2.0, 2.0);
  const double angle = rng.uniform(0.0, kTwoPi);
  const Point2 shift{rng.uniform(-10.0, 10.0) * scale, rng.uniform(-10.0, 10.0) * scale};
  return Triangle(similarity(a, scale, angle, shift), similarity(b, scale, angle, shift),
                  similarity(c, scale, angle, shift));
}

std::optional<Triangle> try_random(RandomStream& rng) {
  const Point2 a{rng.uniform(-1, 1), rng.uniform(-1, 1)};
  const Point2 b{rng.uniform(-1, 1), rng.uniform(-1, 1)};
  const Point2 c{rng.uniform(-1, 1), rng.uniform(-1, 1)};
  try {
    Triangle t = random_placement(rng, a, b, c);
    if (t.area() >= 1e-6 * t.diameter() * t.diameter()) return t;
  } catch (const DegenerateTriangle&) {
  }
  return std::nullopt;
}

std::optional<Triangle> try_near_degenerate(RandomStream& rng) {
  // Base on [-1, 1] x {0} with apex at height h; area = h, diameter in [2, 2.6].
  const double apex_x = rng.uniform(-1.5, 1.5);
  const double diam = std::max(2.0, std::max(std::abs(apex_x - 1.0), std::abs(apex_x + 1.0)));
  const double ratio = rng.log_uniform(std::log10(20.0 * kDegenerateAreaFactor), -3.0);
  const double h = ratio * diam * diam;
  try {
    Triangle t = random_placement(rng, {-1.0, 0.0}, {1.0, 0.0}, {apex_x, h});
    if (t.area() >= 10.0 * kDegenerateAreaFactor * t.diameter() * t.diameter()) return t;
  } catch (const DegenerateTriangle&) {
  }
  return std::nullopt;
}

std::optional<Triangle> try_equilateral(RandomStream& rng, double perturbation) {
  Point2 v[3];
  for (int i = 0; i < 3; ++i) {
    const double theta = std::numbers::pi / 2.0 + i * kTwoPi / 3.0;
    v[i] = Point2{std::cos(theta) + perturbation * rng.uniform(-1, 1),
                  std::sin(theta) + perturbation * rng.uniform(-1, 1)};
  }
  try {
    return random_placement(rng, v[0], v[1], v[2]);
  } catch (const DegenerateTriangle&) {
  }
  return std::nullopt;
}

BaryCoords target_coords(RandomStream& rng, SampleTarget target) {
  double c[3] = {0, 0, 0};
  switch (target) {
    case SampleTarget::Lambda0: {
      double sum = 0.0;
      for (double& x : c) sum += (x = 0.01 + rng.uniform());
      for (double& x : c) x /= sum;
      break;
    }
    case SampleTarget::Mu1:
    case SampleTarget::Mu2:
    case SampleTarget::Mu3: {
      const int k = static_cast<int>(target) - static_cast<int>(SampleTarget::Mu1);
      const double s = rng.log_uniform(-3.0, 2.0);
      const double f = rng.uniform(0.01, 0.99);
      c[k] = -s;
      c[(k + 1) % 3] = (1.0 + s) * f;
      c[(k + 2) % 3] = (1.0 + s) * (1.0 - f);
      break;
    }
    case SampleTarget::Mu4:
    case SampleTarget::Mu5:
    case SampleTarget::Mu6: {
      const int k = static_cast<int>(target) - static_cast<int>(SampleTarget::Mu4);
      const double s1 = rng.log_uniform(-3.0, 2.0);
      const double s2 = rng.log_uniform(-3.0, 2.0);
      c[k] = 1.0 + s1 + s2;
      c[(k + 1) % 3] = -s1;
      c[(k + 2) % 3] = -s2;
      break;
    }
    default:
      break;
  }
  return BaryCoords{c[0], c[1], c[2]};
}

Point2 draw_candidate(RandomStream& rng, const Triangle& t, SampleTarget target) {
  if (target == SampleTarget::Sideline) {
    const int k = pick_index(rng, 3);
    double s = 0.0;
    do {
      s = rng.uniform(-3.0, 4.0);
    } while (std::abs(s) < 1e-3 || std::abs(s - 1.0) < 1e-3);
    return s * t.vertex((k + 1) % 3) + (1.0 - s) * t.vertex((k + 2) % 3);
  }
  if (target == SampleTarget::NearVertex) {
    const int k = pick_index(rng, 3);
    const double rho = t.diameter() * rng.log_uniform(kNearVertexMinExp, kNearVertexMaxExp);
    const double theta = rng.uniform(0.0, kTwoPi);
    return t.vertex(k) + Point2{rho * std::cos(theta), rho * std::sin(theta)};
  }
  return from_barycentric(t, target_coords(rng, target));
}

}  // namespace

double RandomStream::log_uniform(double lo_exp, double hi_exp) {
  return std::pow(10.0, uniform(lo_exp, hi_exp));
}

RandomStream stream_for(std::uint64_t seed, std::uint64_t index) {
  return RandomStream(splitmix64(seed ^ index));
}

namespace {
constexpr std::array<std::string_view, 4> kShapeNames{"random", "near-degenerate",
                                                      "equilateral-perturbed", "mixed"};
constexpr std::array<std::string_view, kNumTargets> kTargetNames{
    "lambda0", "mu1", "mu2", "mu3", "mu4", "mu5", "mu6", "sideline", "near-vertex"};
}  // namespace

std::string_view to_string(TriangleShape s) { return kShapeNames[static_cast<std::size_t>(s)]; }

std::optional<TriangleShape> shape_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kShapeNames.size(); ++i) {
    if (kShapeNames[i] == s) return static_cast<TriangleShape>(i);
  }
  return std::nullopt;
}

std::string_view to_string(SampleTarget t) { return kTargetNames[static_cast<std::size_t>(t)]; }

std::optional<SampleTarget> target_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kTargetNames.size(); ++i) {
    if (kTargetNames[i] == s) return static_cast<SampleTarget>(i);
  }
  return std::nullopt;
}

Triangle sample_triangle(RandomStream& rng, TriangleShape shape, double perturbation) {
  if (shape == TriangleShape::Mixed) {
    const int k = pick_index(rng, 4);
    shape = k < 2 ? TriangleShape::Random
                  : (k == 2 ? TriangleShape::NearDegenerate : TriangleShape::EquilateralPerturbed);
  }
  for (int attempt = 0; attempt < kMaxTriangleRetries; ++attempt) {
    std::optional<Triangle> t;
    switch (shape) {
      case TriangleShape::Random: t = try_random(rng); break;
      case TriangleShape::NearDegenerate: t = try_near_degenerate(rng); break;
      case TriangleShape::EquilateralPerturbed: t = try_equilateral(rng, perturbation); break;
      case TriangleShape::Mixed: break;
    }
    if (t) return *t;
  }
  throw SamplingError("could not sample a non-degenerate triangle");
}

bool satisfies_target(const Triangle& t, Point2 m, SampleTarget target, double eps) {
  const Region region = classify(t, m, eps);
  if (is_vertex(region)) return false;
  const SignTriple pattern = sign_pattern(barycentric(t, m), eps);
  switch (target) {
    case SampleTarget::Sideline:
      return pattern.zeros() == 1;
    case SampleTarget::NearVertex: {
      double nearest = distance(m, t.A());
      for (int i = 1; i < 3; ++i) nearest = std::min(nearest, distance(m, t.vertex(i)));
      return nearest <= std::pow(10.0, kNearVertexMaxExp) * t.diameter();
    }
    default:
      return pattern.zeros() == 0 && static_cast<int>(region) == static_cast<int>(target);
  }
}

Point2 sample_point(RandomStream& rng, const Triangle& t, SampleTarget target, double eps) {
  for (int attempt = 0; attempt < kMaxPointRetries; ++attempt) {
    const Point2 m = draw_candidate(rng, t, target);
    if (satisfies_target(t, m, target, eps)) return m;
  }
  throw SamplingError("no point satisfying target " + std::string(to_string(target)));
}

RegionMix RegionMix::uniform() {
  RegionMix mix;
  mix.weights.fill(1.0 / kNumTargets);
  return mix;
}

RegionMix RegionMix::only(SampleTarget t) {
  RegionMix mix;
  mix.weights[static_cast<std::size_t>(t)] = 1.0;
  return mix;
}

void RegionMix::validate() const {
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("region mix weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("region mix weights must sum to 1");
}

SampleTarget RegionMix::pick(double u) const {
  double acc = 0.0;
  int last = 0;
  for (int i = 0; i < kNumTargets; ++i) {
    if (weights[static_cast<std::size_t>(i)] <= 0.0) continue;
    last = i;
    acc += weights[static_cast<std::size_t>(i)];
    if (u < acc) return static_cast<SampleTarget>(i);
  }
  return static_cast<SampleTarget>(last);
}

SampleCase fuzz_case(const FuzzConfig& config, std::uint64_t index, SampleTarget* target_out,
                     bool* fell_back) {
  RandomStream rng = stream_for(config.seed, index);
  const SampleTarget target = config.mix.pick(rng.uniform());
  if (target_out) *target_out = target;
  if (fell_back) *fell_back = false;

  for (int attempt = 0; attempt < 2 * kMaxShapeAttempts; ++attempt) {
    const TriangleShape shape = attempt < kMaxShapeAttempts ? config.shape : TriangleShape::Random;
    if (fell_back) *fell_back = attempt >= kMaxShapeAttempts;
    const Triangle t = sample_triangle(rng, shape, config.perturbation);
    try {
      const Point2 m = sample_point(rng, t, target, config.eps);
      return SampleCase{index, t.vertices(), m};
    } catch (const SamplingError&) {
    }
  }
  throw SamplingError("sample " + std::to_string(index) + " could not be drawn");
}

namespace {

struct Entry {
  InequalityId id{};
  Region region{};
  double slack = 0.0;
  double scale = 0.0;
};

struct Outcome {
  SampleCase sample;
  SampleTarget target{};
  bool fell_back = false;
  Region region{};
  std::array<Entry, 4> entries{};
  int n_entries = 0;
  bool sign_mismatch = false;
  bool pattern_mismatch = false;
};

Outcome run_sample(const FuzzConfig& config, std::uint64_t index) {
  Outcome out;
  out.sample = fuzz_case(config, index, &out.target, &out.fell_back);
  const auto& v = out.sample.triangle;
  const Triangle t(v[0], v[1], v[2]);
  const Point2 m = out.sample.point;
  const double eps = config.eps;

  out.region = classify(t, m, eps);
  auto add = [&](const InequalityReport& r) {
    out.entries[static_cast<std::size_t>(out.n_entries++)] = Entry{r.id, r.region, r.slack, r.scale};
  };

  const InequalityReport main = evaluate(t, m, eps);
  add(main);
  add(dergiades_report(t, m, eps));
  if (out.region == Region::Lambda0) {
    const ClassicReports classic = classic_reports(t, m, eps);
    add(classic.barrow);
    add(classic.erdos_mordell);
  }

  if (!is_vertex(out.region)) {
    const BaryCoords bc = barycentric(t, m);
    const SignTriple coords = sign_pattern(bc, eps);
    const SignedBisectorTriple lp = signed_bisectors(t, m, eps);
    for (int i = 0; i < 3; ++i) {
      if (coords[i] == 0) continue;
      const int s = lp[i] > 0 ? 1 : (lp[i] < 0 ? -1 : 0);
      if (s != coords[i]) out.sign_mismatch = true;
    }
    if (coords.zeros() == 0 && !(term_signs(main) == expected_pattern(out.region))) {
      out.pattern_mismatch = true;
    }
  }
  return out;
}

}  // namespace

FuzzReport fuzz(const FuzzConfig& config) {
  config.mix.validate();
  if (config.n == 0) throw std::invalid_argument("fuzz needs n >= 1");

  std::vector<Outcome> outcomes(config.n);
  unsigned workers = config.workers == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                         : config.workers;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, config.n));

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    constexpr std::uint64_t kChunk = 256;
    for (;;) {
      const std::uint64_t begin = next.fetch_add(kChunk);
      if (begin >= config.n) return;
      const std::uint64_t end = std::min(config.n, begin + kChunk);
      try {
        for (std::uint64_t i = begin; i < end; ++i) outcomes[i] = run_sample(config, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = config.n;
        return;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Merge strictly in sample order so the report is scheduling-independent.
  FuzzReport report;
  report.seed = config.seed;
  report.n = config.n;
  report.tol_factor = config.tol_factor;
  std::map<std::pair<int, int>, CellStats> cells;
  for (const Outcome& o : outcomes) {
    report.region_counts[static_cast<std::size_t>(o.region)]++;
    report.target_counts[static_cast<std::size_t>(o.target)]++;
    report.shape_fallbacks += o.fell_back;
    report.sign_mismatches += o.sign_mismatch;
    report.pattern_mismatches += o.pattern_mismatch;
    for (int k = 0; k < o.n_entries; ++k) {
      const Entry& e = o.entries[static_cast<std::size_t>(k)];
      const double relative = e.scale > 0 ? e.slack / e.scale : e.slack;
      auto [it, inserted] = cells.try_emplace({static_cast<int>(e.id), static_cast<int>(e.region)});
      CellStats& c = it->second;
      if (inserted || relative < c.min_relative_slack) {
        c.id = e.id;
        c.region = e.region;
        c.min_relative_slack = relative;
        c.min_slack = e.slack;
        c.argmin = o.sample;
      }
      c.count++;
      if (e.slack < -config.tol_factor * e.scale) {
        c.violation_count++;
        report.violation_count++;
        if (report.violations.size() < kMaxRecordedViolations) {
          report.violations.push_back(Violation{e.id, e.region, e.slack, e.scale, o.sample});
        }
      }
    }
  }
  for (auto& [key, c] : cells) report.cells.push_back(c);
  return report;
}

// ---------------------------------------------------------------------------

InequalityReport report_for(const Triangle& t, Point2 m, InequalityId id, double eps) {
  switch (id) {
    case InequalityId::Barrow: return classic_reports(t, m, eps).barrow;
    case InequalityId::ErdosMordell: return classic_reports(t, m, eps).erdos_mordell;
    case InequalityId::Dergiades: return dergiades_report(t, m, eps);
    case InequalityId::LuWeighted: return lu_report(t, m, eps);
    case InequalityId::SignedBarrow: return signed_barrow_report(t, m, eps);
    case InequalityId::VertexA:
    case InequalityId::VertexB:
    case InequalityId::VertexC: {
      const int v = static_cast<int>(id) - static_cast<int>(InequalityId::VertexA);
      if (vertex_index(classify(t, m, eps)) != v) {
        throw DomainError("the reduced vertex inequality needs M at the vertex");
      }
      return vertex_report(t, m, v);
    }
  }
  throw DomainError("unknown inequality");
}

namespace {

struct SearchProblem {
  const Triangle* triangle;
  InequalityId id;
  std::optional<Region> region;
  double eps;
  double penalty;
  Point2 centroid;
};

double search_objective(const gsl_vector* x, void* params) {
  const auto* p = static_cast<const SearchProblem*>(params);
  const Point2 m{gsl_vector_get(x, 0), gsl_vector_get(x, 1)};
  const double outside = p->penalty + distance(m, p->centroid);
  if (!is_finite(m)) return p->penalty * 2.0;
  try {
    if (p->region && classify(*p->triangle, m, p->eps) != *p->region) return outside;
    return report_for(*p->triangle, m, p->id, p->eps).slack;
  } catch (const GeometryError&) {
    return outside;
  }
}

struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* s) const { gsl_multimin_fminimizer_free(s); }
};
struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};

}  // namespace

TightnessResult tightness_search(const Triangle& t, InequalityId id,
                                 const TightnessOptions& options) {
  const bool interior_only = id == InequalityId::Barrow || id == InequalityId::ErdosMordell ||
                             id == InequalityId::LuWeighted;
  if (static_cast<int>(id) >= static_cast<int>(InequalityId::VertexA)) {
    throw DomainError("vertex inequalities have no full-dimensional domain to search");
  }
  if (options.starts < 1) throw DomainError("tightness search needs at least one start");
  if (options.region && is_vertex(*options.region)) {
    throw DomainError("cannot confine the search to a vertex");
  }
  if (interior_only && options.region && *options.region != Region::Lambda0) {
    throw DomainError("interior inequalities can only be searched in lambda0");
  }

  gsl_set_error_handler_off();
  const double diam = t.diameter();
  SearchProblem problem{&t,
                        id,
                        interior_only ? std::optional<Region>(Region::Lambda0) : options.region,
                        options.eps,
                        1e6 * diam,
                        (t.A() + t.B() + t.C()) / 3.0};

  gsl_multimin_function fn{&search_objective, 2, &problem};
  std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> solver(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 2));
  std::unique_ptr<gsl_vector, VectorDeleter> x(gsl_vector_alloc(2));
  std::unique_ptr<gsl_vector, VectorDeleter> step(gsl_vector_alloc(2));

  TightnessResult best;
  double best_value = 0.0;
  for (int k = 0; k < options.starts; ++k) {
    SampleTarget target = SampleTarget::Lambda0;
    if (problem.region) {
      target = static_cast<SampleTarget>(static_cast<int>(*problem.region));
    } else {
      target = static_cast<SampleTarget>(k % 7);
    }
    RandomStream rng = stream_for(options.seed, static_cast<std::uint64_t>(k));
    const Point2 start = sample_point(rng, t, target, options.eps);

    gsl_vector_set(x.get(), 0, start.x);
    gsl_vector_set(x.get(), 1, start.y);
    gsl_vector_set_all(step.get(), 0.05 * diam);
    gsl_multimin_fminimizer_set(solver.get(), &fn, x.get(), step.get());
    for (int iter = 0; iter < options.max_iterations; ++iter) {
      if (gsl_multimin_fminimizer_iterate(solver.get()) != GSL_SUCCESS) break;
      const double size = gsl_multimin_fminimizer_size(solver.get());
      if (gsl_multimin_test_size(size, options.step_tolerance * diam) == GSL_SUCCESS) break;
    }
    const double value = gsl_multimin_fminimizer_minimum(solver.get());
    if (best.best_start < 0 || value < best_value) {
      best_value = value;
      best.best_start = k;
      const gsl_vector* xm = gsl_multimin_fminimizer_x(solver.get());
      best.point = Point2{gsl_vector_get(xm, 0), gsl_vector_get(xm, 1)};
    }
  }

  const InequalityReport rep = report_for(t, best.point, id, options.eps);
  best.slack = rep.slack;
  best.region = classify(t, best.point, options.eps);
  return best;
}

// ---------------------------------------------------------------------------

BBox triangle_bbox(const Triangle& t, double margin) {
  BBox b{t.A().x, t.A().y, t.A().x, t.A().y};
  for (int i = 1; i < 3; ++i) {
    b.x0 = std::min(b.x0, t.vertex(i).x);
    b.y0 = std::min(b.y0, t.vertex(i).y);
    b.x1 = std::max(b.x1, t.vertex(i).x);
    b.y1 = std::max(b.y1, t.vertex(i).y);
  }
  const double pad = margin * t.diameter();
  return BBox{b.x0 - pad, b.y0 - pad, b.x1 + pad, b.y1 + pad};
}

ScanGrid grid_scan(const Triangle& t, const BBox& bbox, int resolution, double eps) {
  if (resolution < 2) throw DomainError("scan resolution must be at least 2");
  if (!(bbox.x1 > bbox.x0 && bbox.y1 > bbox.y0) || !std::isfinite(bbox.x0 + bbox.x1 + bbox.y0 + bbox.y1)) {
    throw DomainError("scan bounding box is empty");
  }
  ScanGrid grid;
  grid.bbox = bbox;
  grid.resolution = resolution;
  grid.rows.reserve(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution));
  const double dx = (bbox.x1 - bbox.x0) / resolution;
  const double dy = (bbox.y1 - bbox.y0) / resolution;
  for (int j = 0; j < resolution; ++j) {
    for (int i = 0; i < resolution; ++i) {
      const Point2 m{bbox.x0 + (i + 0.5) * dx, bbox.y0 + (j + 0.5) * dy};
      ScanRow row;
      row.x = m.x;
      row.y = m.y;
      row.region = classify(t, m, eps);
      const DistanceTriple r = vertex_distances(t, m);
      row.ra = r.ra;
      row.rb = r.rb;
      row.rc = r.rc;
      const InequalityReport rep = evaluate(t, m, eps);
      if (const int v = vertex_index(row.region); v >= 0) {
        double lp[3] = {0.0, 0.0, 0.0};
        lp[v] = rep.terms.front().value;
        row.lpa = lp[0];
        row.lpb = lp[1];
        row.lpc = lp[2];
      } else {
        const SignedBisectorTriple lp = signed_bisectors(t, m, eps);
        row.lpa = lp.la;
        row.lpb = lp.lb;
        row.lpc = lp.lc;
      }
      row.lhs = rep.lhs;
      row.rhs = rep.rhs;
      row.slack = rep.slack;
      grid.rows.push_back(row);
    }
  }
  return grid;
}

}  // namespace barrow
