#include "treealpha/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "treealpha/rng.hpp"

namespace treealpha {

namespace {

double default_window(int n, double feature) {
  // Roughly constant expected overlap degree as n grows.
  return std::max(1.0, 1.6 * std::sqrt(double(n))) * feature;
}

ObjectCollection gen_unit_disks(const GeneratorSpec& s) {
  ObjectCollection c;
  c.kind = CollectionKind::UnitDisks;
  c.params.radius = s.radius;
  const double w = s.window > 0 ? s.window : default_window(s.n, 2 * s.radius);
  auto rng = split_stream(s.seed, "unit_disks");
  for (int i = 0; i < s.n; ++i) {
    Disk d;
    d.center = {rng.next_range(0, w), rng.next_range(0, w)};
    d.radius = s.radius;
    c.objects.push_back(GeometricObject{d});
  }
  return c;
}

ObjectCollection gen_similar_disks(const GeneratorSpec& s) {
  ObjectCollection c;
  c.kind = CollectionKind::SimilarlySizedFat;
  c.params.size_ratio = s.size_ratio;
  c.params.fatness = s.fatness;
  const double rmin = s.radius;
  const double w = s.window > 0 ? s.window : default_window(s.n, 2 * rmin * s.size_ratio);
  auto rng = split_stream(s.seed, "similarly_sized_disks");
  for (int i = 0; i < s.n; ++i) {
    Disk d;
    d.center = {rng.next_range(0, w), rng.next_range(0, w)};
    d.radius = rng.next_range(rmin, rmin * s.size_ratio);
    c.objects.push_back(GeometricObject{d});
  }
  return c;
}

ObjectCollection gen_fat_disks(const GeneratorSpec& s) {
  // Disks of widely varying radius; fatness declared, not derived.
  ObjectCollection c;
  c.kind = CollectionKind::Generic;
  c.params.fatness = s.fatness;
  const double rlo = 0.05, rhi = 0.45;
  const double w = s.window > 0 ? s.window : default_window(s.n, 2 * rhi);
  auto rng = split_stream(s.seed, "fat_disks");
  for (int i = 0; i < s.n; ++i) {
    Disk d;
    d.center = {rng.next_range(0, w), rng.next_range(0, w)};
    // Log-uniform radii so several scale indices are populated.
    d.radius = rlo * std::pow(rhi / rlo, rng.next_double());
    c.objects.push_back(GeometricObject{d});
  }
  return c;
}

ObjectCollection gen_unit_rects(const GeneratorSpec& s) {
  ObjectCollection c;
  c.kind = CollectionKind::UnitWidthRects;
  c.params.width = s.width;
  const double w = s.window > 0 ? s.window : default_window(s.n, 2 * s.width);
  auto rng = split_stream(s.seed, "unit_width_rects");
  for (int i = 0; i < s.n; ++i) {
    Box b;
    const double x = rng.next_range(0, w);
    const double y = rng.next_range(0, w);
    const double h = rng.next_range(0.5 * s.width, 3.0 * s.width);
    b.lo = {x, y};
    b.hi = {x + s.width, y + h};
    c.objects.push_back(GeometricObject{b});
  }
  return c;
}

ObjectCollection gen_grid_paths(const GeneratorSpec& s, bool edge_mode) {
  ObjectCollection c;
  c.kind = edge_mode ? CollectionKind::GridPathsE : CollectionKind::GridPathsV;
  c.params.horiz_bound = s.horiz_bound;
  const long long cols =
      std::max<long long>(s.horiz_bound + 1,
                          llround(std::ceil(std::sqrt(double(s.n)))) * s.horiz_bound);
  auto rng = split_stream(s.seed, edge_mode ? "grid_paths_e" : "grid_paths_v");
  for (int i = 0; i < s.n; ++i) {
    GridPath p;
    long long x = rng.next_int(0, cols);
    long long y = rng.next_int(0, cols);
    const long long ydir = rng.next_below(2) ? 1 : -1;
    long long hbudget = s.horiz_bound;
    bool horizontal = rng.next_below(2) == 0;
    p.pts.push_back({x, y});
    const int segments = 1 + int(rng.next_below(std::uint64_t(s.max_bends + 1)));
    for (int k = 0; k < segments; ++k) {
      if (horizontal) {
        if (hbudget > 0) {
          const long long len = rng.next_int(1, hbudget);
          hbudget -= len;
          x += len;
          p.pts.push_back({x, y});
        }
      } else {
        const long long len = rng.next_int(1, 3);
        y += ydir * len;  // one vertical direction per path keeps it simple
        p.pts.push_back({x, y});
      }
      horizontal = !horizontal;
    }
    if (edge_mode && p.pts.size() < 2) {
      y += ydir;
      p.pts.push_back({x, y});
    }
    c.objects.push_back(GeometricObject{p});
  }
  return c;
}

ObjectCollection gen_grid_disks(const GeneratorSpec& s) {
  // n x n lattice of tangent disks: orthogonal neighbours touch, diagonal
  // ones do not, so the intersection graph is exactly the n x n grid.
  ObjectCollection c;
  c.kind = CollectionKind::UnitDisks;
  c.params.radius = s.radius;
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j) {
      Disk d;
      d.center = {2 * s.radius * i, 2 * s.radius * j};
      d.radius = s.radius;
      c.objects.push_back(GeometricObject{d});
    }
  return c;
}

ObjectCollection gen_biclique_rects(const GeneratorSpec& s) {
  // n horizontal slabs crossed by n vertical slabs: K_{n,n}.
  ObjectCollection c;
  c.kind = CollectionKind::Generic;
  const double span = 3.0 * s.n;
  for (int i = 0; i < s.n; ++i) {
    Box b;
    b.lo = {0.0, 3.0 * i};
    b.hi = {span, 3.0 * i + 1.0};
    c.objects.push_back(GeometricObject{b});
  }
  for (int j = 0; j < s.n; ++j) {
    Box b;
    b.lo = {3.0 * j, -1.0};
    b.hi = {3.0 * j + 1.0, span};
    c.objects.push_back(GeometricObject{b});
  }
  return c;
}

}  // namespace

ObjectCollection generate_instance(const GeneratorSpec& spec) {
  if (spec.n <= 0) throw std::invalid_argument("generator needs n >= 1");
  ObjectCollection c;
  if (spec.kind == "unit_disks") c = gen_unit_disks(spec);
  else if (spec.kind == "similarly_sized_disks") c = gen_similar_disks(spec);
  else if (spec.kind == "fat_disks") c = gen_fat_disks(spec);
  else if (spec.kind == "unit_width_rects") c = gen_unit_rects(spec);
  else if (spec.kind == "grid_paths_v") c = gen_grid_paths(spec, false);
  else if (spec.kind == "grid_paths_e") c = gen_grid_paths(spec, true);
  else if (spec.kind == "grid_disks") c = gen_grid_disks(spec);
  else if (spec.kind == "biclique_rects") c = gen_biclique_rects(spec);
  else throw std::invalid_argument("unknown generator kind: " + spec.kind);
  if (auto err = validate_collection(c))
    throw std::logic_error("generator produced an invalid collection: " + *err);
  return c;
}

std::vector<Weight> generate_weights(int n, std::uint64_t seed, long long lo,
                                     long long hi) {
  if (lo < 0 || hi < lo) throw std::invalid_argument("weight range must be 0 <= lo <= hi");
  auto rng = split_stream(seed, "weights");
  std::vector<Weight> w;
  w.reserve(std::size_t(n));
  for (int i = 0; i < n; ++i) w.emplace_back(rng.next_int(lo, hi), 1);
  return w;
}

std::vector<Weight> weights_from_spec(const std::string& spec, int n) {
  if (spec == "unit") return std::vector<Weight>(std::size_t(n), Weight(1));
  if (spec.rfind("uniform:", 0) == 0) {
    const auto rest = spec.substr(8);
    const auto p1 = rest.find(':');
    const auto p2 = rest.find(':', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
      throw std::invalid_argument("weight spec needs uniform:<lo>:<hi>:<seed>");
    const long long lo = std::stoll(rest.substr(0, p1));
    const long long hi = std::stoll(rest.substr(p1 + 1, p2 - p1 - 1));
    const std::uint64_t seed = std::stoull(rest.substr(p2 + 1));
    return generate_weights(n, seed, lo, hi);
  }
  throw std::invalid_argument("unknown weight spec: " + spec);
}

}  // namespace treealpha
