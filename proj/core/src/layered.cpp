#include "treealpha/layered.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace treealpha {

namespace {

/// Shift so every coordinate is >= 0 (paths get an integer shift).
ObjectCollection normalize_position(const ObjectCollection& c) {
  if (c.objects.empty()) throw std::invalid_argument("empty collection");
  double xlo = 0, ylo = 0;
  bool first = true;
  for (const auto& o : c.objects) {
    auto [lo, hi] = bounding_box(o);
    (void)hi;
    if (first) {
      xlo = lo[0];
      ylo = lo[1];
      first = false;
    } else {
      xlo = std::min(xlo, lo[0]);
      ylo = std::min(ylo, lo[1]);
    }
  }
  const bool lattice = c.objects.front().is_grid_path();
  Point shift{lattice ? -std::floor(xlo) : -xlo, lattice ? -std::floor(ylo) : -ylo};
  return translate_collection(c, shift);
}

StripStructure build_strips(const ObjectCollection& c, double vertical_width) {
  StripStructure s;
  s.vertical_width = vertical_width;
  std::vector<double> vals;
  vals.reserve(2 * c.objects.size());
  for (const auto& o : c.objects) {
    auto [lo, hi] = bounding_box(o);
    vals.push_back(lo[1]);
    vals.push_back(hi[1]);
  }
  std::stable_sort(vals.begin(), vals.end());
  s.breakpoints = std::move(vals);
  return s;
}

TreeDecomposition strip_path_td(const ObjectCollection& c, const StripStructure& s) {
  TreeDecomposition td;
  const int strips = s.strip_count();
  td.bags.resize(std::size_t(strips));
  for (int i = 1; i <= strips; ++i) {
    auto [a, b] = s.strip_range(i);
    auto& bag = td.bags[std::size_t(i - 1)];
    for (std::size_t v = 0; v < c.objects.size(); ++v) {
      auto [lo, hi] = bounding_box(c.objects[v]);
      if (lo[1] <= b + kGeomEps && a <= hi[1] + kGeomEps)
        bag.push_back(static_cast<int>(v));
    }
  }
  for (int i = 0; i + 1 < strips; ++i) td.tree_edges.emplace_back(i, i + 1);
  return td;
}

Layering leftmost_layering(const ObjectCollection& c, double width) {
  if (width <= 0) throw std::invalid_argument("vertical strip width must be positive");
  Layering l;
  for (std::size_t v = 0; v < c.objects.size(); ++v) {
    auto [lo, hi] = bounding_box(c.objects[v]);
    (void)hi;
    const int j = std::max(0, static_cast<int>(std::floor(lo[0] / width)));
    if (j >= l.layer_count()) l.layers.resize(std::size_t(j) + 1);
    l.layers[std::size_t(j)].push_back(static_cast<int>(v));
  }
  l.canonicalize();
  return l;
}

LayeredDecomposition build_layered(const ObjectCollection& original,
                                   double vertical_width, long long bound,
                                   std::string method, PathMode mode) {
  ObjectCollection c = normalize_position(original);
  LayeredDecomposition out;
  out.strips = build_strips(c, vertical_width);
  out.td = strip_path_td(c, out.strips);
  out.layering = leftmost_layering(c, vertical_width);
  out.declared_bound = bound;
  out.method = std::move(method);

  Graph g = intersection_graph(c, mode);
  if (auto bad = validate_td(g, out.td))
    throw std::logic_error("strip decomposition invalid: " + bad->message);
  if (auto bad = validate_layering(g, out.layering))
    throw std::logic_error("strip layering invalid: " + *bad);
  return out;
}

}  // namespace

std::pair<double, double> StripStructure::strip_range(int i) const {
  const auto& z = breakpoints;
  if (i < 1 || i > strip_count()) throw std::invalid_argument("strip index out of range");
  if (i % 2 == 1) {
    const std::size_t a = std::size_t((i + 1) / 2);  // 1-based z index
    return {z[a - 1], (z[a - 1] + z[a]) / 2};
  }
  const std::size_t a = std::size_t(i / 2);
  return {(z[a - 1] + z[a]) / 2, z[a]};
}

LayeredDecomposition layered_td_fat_similar(const ObjectCollection& c,
                                            double ratio, long long cfat) {
  if (ratio < 1) throw std::invalid_argument("size ratio must be >= 1");
  if (cfat < 1) throw std::invalid_argument("fatness constant must be >= 1");
  double dmin = 0;
  bool first = true;
  for (const auto& o : c.objects) {
    const double d = object_diameter(o);
    dmin = first ? d : std::min(dmin, d);
    first = false;
  }
  if (dmin <= 0) throw std::invalid_argument("degenerate object in fat collection");
  const long long bound =
      static_cast<long long>(std::ceil(2 * std::sqrt(2.0) * ratio - 1e-12)) * cfat;
  return build_layered(c, ratio * dmin, bound, "fat_similar", PathMode::Vertex);
}

LayeredDecomposition layered_td_unit_disks(const ObjectCollection& c) {
  if (c.kind != CollectionKind::UnitDisks || !c.params.radius)
    throw std::invalid_argument("expected a shared-radius disk collection");
  return build_layered(c, 2 * *c.params.radius, 3, "unit_disks", PathMode::Vertex);
}

LayeredDecomposition layered_td_unit_rects(const ObjectCollection& c) {
  if (c.kind != CollectionKind::UnitWidthRects || !c.params.width)
    throw std::invalid_argument("expected a shared-width box collection");
  return build_layered(c, *c.params.width, 1, "unit_rects", PathMode::Vertex);
}

LayeredDecomposition layered_td_grid_paths(const ObjectCollection& c,
                                           long long ell, PathMode mode) {
  if (ell < 1) throw std::invalid_argument("horizontal budget must be >= 1");
  for (const auto& o : c.objects) {
    auto [xlo, xhi] = horizontal_part(o);
    if (xhi - xlo > double(ell) + kGeomEps)
      throw std::invalid_argument("path exceeds the declared horizontal budget");
  }
  const long long bound = mode == PathMode::Vertex ? 2 * ell : 6 * ell - 1;
  return build_layered(c, double(ell), bound,
                       mode == PathMode::Vertex ? "grid_paths_v" : "grid_paths_e", mode);
}

LayeredDecomposition layered_td_auto(const ObjectCollection& c) {
  switch (c.kind) {
    case CollectionKind::UnitDisks:
      return layered_td_unit_disks(c);
    case CollectionKind::UnitWidthRects:
      return layered_td_unit_rects(c);
    case CollectionKind::SimilarlySizedFat: {
      if (!c.params.size_ratio || !c.params.fatness)
        throw std::invalid_argument("similar-fat collection lacks declared ratio/fatness");
      return layered_td_fat_similar(c, *c.params.size_ratio,
                                    static_cast<long long>(*c.params.fatness));
    }
    case CollectionKind::GridPathsV:
    case CollectionKind::GridPathsE: {
      if (!c.params.horiz_bound)
        throw std::invalid_argument("path collection lacks a horizontal budget");
      return layered_td_grid_paths(c, *c.params.horiz_bound,
                                   c.kind == CollectionKind::GridPathsV
                                       ? PathMode::Vertex
                                       : PathMode::Edge);
    }
    case CollectionKind::Generic:
      throw std::invalid_argument("no layered construction for generic collections");
  }
  throw std::invalid_argument("unknown collection kind");
}

StripTd strip_td(const ObjectCollection& original, double ell) {
  if (ell <= 0) throw std::invalid_argument("window width must be positive");
  ObjectCollection c = normalize_position(original);

  StripTd out;
  PathMode mode = PathMode::Vertex;
  switch (c.kind) {
    case CollectionKind::UnitDisks: {
      if (!c.params.radius) throw std::invalid_argument("missing shared radius");
      const double r = *c.params.radius;
      out.declared_bound = 3 * static_cast<long long>(std::ceil(ell / (2 * r) - 1e-12));
      out.method = "strip_unit_disks";
      break;
    }
    case CollectionKind::UnitWidthRects: {
      if (!c.params.width) throw std::invalid_argument("missing shared width");
      out.declared_bound = static_cast<long long>(std::ceil(ell / *c.params.width - 1e-12));
      out.method = "strip_unit_rects";
      break;
    }
    case CollectionKind::GridPathsV:
    case CollectionKind::GridPathsE: {
      const long long cols = std::llround(ell);
      if (std::abs(ell - double(cols)) > 1e-9 || cols < 1)
        throw std::invalid_argument("column windows must be positive integers");
      mode = c.kind == CollectionKind::GridPathsV ? PathMode::Vertex : PathMode::Edge;
      out.declared_bound = mode == PathMode::Vertex ? cols : 3 * cols - 1;
      out.method = mode == PathMode::Vertex ? "strip_grid_paths_v" : "strip_grid_paths_e";
      break;
    }
    default:
      throw std::invalid_argument("no windowed construction for this collection kind");
  }

  // The whole realization must fit the declared window.
  double xlo = 0, xhi = 0;
  bool first = true;
  for (const auto& o : c.objects) {
    auto [a, b] = horizontal_part(o);
    if (first) {
      xlo = a;
      xhi = b;
      first = false;
    } else {
      xlo = std::min(xlo, a);
      xhi = std::max(xhi, b);
    }
  }
  const bool lattice = c.objects.front().is_grid_path();
  // Lattice paths are measured in columns occupied, continuous objects in width.
  const double extent = lattice ? (xhi - xlo + 1) : (xhi - xlo);
  if (extent > ell + kGeomEps)
    throw std::invalid_argument("realization does not fit the declared window");

  StripStructure s = build_strips(c, ell);
  out.td = strip_path_td(c, s);
  Graph g = intersection_graph(c, mode);
  if (auto bad = validate_td(g, out.td))
    throw std::logic_error("strip decomposition invalid: " + bad->message);
  return out;
}

}  // namespace treealpha
