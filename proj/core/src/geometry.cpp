#include "treealpha/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace treealpha {

namespace {

double sq(double x) { return x * x; }

double dist2(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += sq(a[j] - b[j]);
  return s;
}

bool disk_disk(const Disk& a, const Disk& b) {
  const double r = a.radius + b.radius + kGeomEps;
  return dist2(a.center, b.center) <= r * r;
}

bool box_box(const Box& a, const Box& b) {
  for (std::size_t j = 0; j < a.lo.size(); ++j) {
    if (a.lo[j] > b.hi[j] + kGeomEps || b.lo[j] > a.hi[j] + kGeomEps) return false;
  }
  return true;
}

bool disk_box(const Disk& d, const Box& b) {
  double s = 0;
  for (std::size_t j = 0; j < d.center.size(); ++j) {
    const double c = std::clamp(d.center[j], b.lo[j], b.hi[j]);
    s += sq(d.center[j] - c);
  }
  const double r = d.radius + kGeomEps;
  return s <= r * r;
}

bool path_path(const GridPath& a, const GridPath& b, PathMode mode) {
  if (mode == PathMode::Vertex) {
    auto pa = grid_path_points(a);
    auto pb = grid_path_points(b);
    std::set<std::array<long long, 2>> sa(pa.begin(), pa.end());
    for (const auto& p : pb)
      if (sa.count(p)) return true;
    return false;
  }
  auto ea = grid_path_edges(a);
  auto eb = grid_path_edges(b);
  std::set<std::array<long long, 4>> sa(ea.begin(), ea.end());
  for (const auto& e : eb)
    if (sa.count(e)) return true;
  return false;
}

}  // namespace

int GeometricObject::dimension() const {
  struct Visitor {
    int operator()(const Disk& d) const { return static_cast<int>(d.center.size()); }
    int operator()(const Box& b) const { return static_cast<int>(b.lo.size()); }
    int operator()(const GridPath&) const { return 2; }
    int operator()(const UnionObject& u) const {
      if (u.members.empty()) throw std::invalid_argument("empty union object");
      return u.members.front().dimension();
    }
  };
  return std::visit(Visitor{}, shape);
}

std::string kind_name(CollectionKind kind) {
  switch (kind) {
    case CollectionKind::UnitDisks: return "unit_disks";
    case CollectionKind::SimilarlySizedFat: return "similarly_sized_fat";
    case CollectionKind::UnitWidthRects: return "unit_width_rects";
    case CollectionKind::GridPathsV: return "grid_paths_v";
    case CollectionKind::GridPathsE: return "grid_paths_e";
    case CollectionKind::Generic: return "generic";
  }
  throw std::invalid_argument("unknown kind");
}

CollectionKind kind_from_name(const std::string& name) {
  if (name == "unit_disks") return CollectionKind::UnitDisks;
  if (name == "similarly_sized_fat") return CollectionKind::SimilarlySizedFat;
  if (name == "unit_width_rects") return CollectionKind::UnitWidthRects;
  if (name == "grid_paths_v") return CollectionKind::GridPathsV;
  if (name == "grid_paths_e") return CollectionKind::GridPathsE;
  if (name == "generic") return CollectionKind::Generic;
  throw std::invalid_argument("unknown collection kind: " + name);
}

bool intersects(const GeometricObject& a, const GeometricObject& b, PathMode mode) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("dimension mismatch in intersection test");

  if (const auto* ua = std::get_if<UnionObject>(&a.shape)) {
    for (const auto& m : ua->members)
      if (intersects(m, b, mode)) return true;
    return false;
  }
  if (const auto* ub = std::get_if<UnionObject>(&b.shape)) {
    for (const auto& m : ub->members)
      if (intersects(a, m, mode)) return true;
    return false;
  }

  const auto* da = std::get_if<Disk>(&a.shape);
  const auto* db = std::get_if<Disk>(&b.shape);
  const auto* ba = std::get_if<Box>(&a.shape);
  const auto* bb = std::get_if<Box>(&b.shape);
  const auto* pa = std::get_if<GridPath>(&a.shape);
  const auto* pb = std::get_if<GridPath>(&b.shape);

  if (da && db) return disk_disk(*da, *db);
  if (ba && bb) return box_box(*ba, *bb);
  if (da && bb) return disk_box(*da, *bb);
  if (db && ba) return disk_box(*db, *ba);
  if (pa && pb) return path_path(*pa, *pb, mode);
  throw std::invalid_argument("unsupported object pair in intersection test");
}

std::pair<Point, Point> bounding_box(const GeometricObject& o) {
  struct Visitor {
    std::pair<Point, Point> operator()(const Disk& d) const {
      Point lo = d.center, hi = d.center;
      for (std::size_t j = 0; j < lo.size(); ++j) {
        lo[j] -= d.radius;
        hi[j] += d.radius;
      }
      return {lo, hi};
    }
    std::pair<Point, Point> operator()(const Box& b) const { return {b.lo, b.hi}; }
    std::pair<Point, Point> operator()(const GridPath& p) const {
      if (p.pts.empty()) throw std::invalid_argument("empty grid path");
      long long xlo = p.pts[0][0], xhi = xlo, ylo = p.pts[0][1], yhi = ylo;
      for (const auto& q : p.pts) {
        xlo = std::min(xlo, q[0]);
        xhi = std::max(xhi, q[0]);
        ylo = std::min(ylo, q[1]);
        yhi = std::max(yhi, q[1]);
      }
      return {Point{double(xlo), double(ylo)}, Point{double(xhi), double(yhi)}};
    }
    std::pair<Point, Point> operator()(const UnionObject& u) const {
      if (u.members.empty()) throw std::invalid_argument("empty union object");
      auto [lo, hi] = bounding_box(u.members.front());
      for (std::size_t i = 1; i < u.members.size(); ++i) {
        auto [l, h] = bounding_box(u.members[i]);
        for (std::size_t j = 0; j < lo.size(); ++j) {
          lo[j] = std::min(lo[j], l[j]);
          hi[j] = std::max(hi[j], h[j]);
        }
      }
      return {lo, hi};
    }
  };
  return std::visit(Visitor{}, o.shape);
}

double object_size(const GeometricObject& o) {
  auto [lo, hi] = bounding_box(o);
  double s = 0;
  for (std::size_t j = 0; j < lo.size(); ++j) s = std::max(s, hi[j] - lo[j]);
  return s;
}

double object_diameter(const GeometricObject& o) {
  struct Visitor {
    double operator()(const Disk& d) const { return 2 * d.radius; }
    double operator()(const Box& b) const {
      double s = 0;
      for (std::size_t j = 0; j < b.lo.size(); ++j) s += sq(b.hi[j] - b.lo[j]);
      return std::sqrt(s);
    }
    double operator()(const GridPath& p) const {
      double best = 0;
      for (std::size_t i = 0; i < p.pts.size(); ++i)
        for (std::size_t j = i + 1; j < p.pts.size(); ++j)
          best = std::max(best, sq(double(p.pts[i][0] - p.pts[j][0])) +
                                    sq(double(p.pts[i][1] - p.pts[j][1])));
      return std::sqrt(best);
    }
    double operator()(const UnionObject& u) const {
      GeometricObject tmp{*&u};
      auto [lo, hi] = bounding_box(tmp);
      double s = 0;
      for (std::size_t j = 0; j < lo.size(); ++j) s += sq(hi[j] - lo[j]);
      return std::sqrt(s);
    }
  };
  return std::visit(Visitor{}, o.shape);
}

std::pair<double, double> horizontal_part(const GeometricObject& o) {
  auto [lo, hi] = bounding_box(o);
  return {lo[0], hi[0]};
}

int rank_of(const GeometricObject& o, int r) {
  if (r < 2) throw std::invalid_argument("rank base must be >= 2");
  const double s = object_size(o);
  if (s <= 0) throw std::invalid_argument("degenerate object has no rank");
  if (s > 1 + 1e-12) throw std::invalid_argument("object size exceeds 1; rescale first");
  const double t = std::log(s) / std::log(1.0 / r);
  const long long snap = std::llround(t);
  if (snap >= 0 && std::abs(s - std::pow(1.0 / r, double(snap))) <= 1e-12)
    return static_cast<int>(snap);
  return static_cast<int>(std::floor(t));
}

namespace {

GeometricObject scale_object(const GeometricObject& o, double f) {
  struct Visitor {
    double f;
    GeometricObject operator()(const Disk& d) const {
      Disk s = d;
      for (auto& c : s.center) c *= f;
      s.radius *= f;
      return GeometricObject{s};
    }
    GeometricObject operator()(const Box& b) const {
      Box s = b;
      for (auto& c : s.lo) c *= f;
      for (auto& c : s.hi) c *= f;
      return GeometricObject{s};
    }
    GeometricObject operator()(const GridPath&) const {
      throw std::invalid_argument("grid-path collections cannot be rescaled");
    }
    GeometricObject operator()(const UnionObject& u) const {
      UnionObject s;
      s.members.reserve(u.members.size());
      for (const auto& m : u.members) s.members.push_back(scale_object(m, f));
      return GeometricObject{s};
    }
  };
  return std::visit(Visitor{f}, o.shape);
}

}  // namespace

std::pair<ObjectCollection, double> scale_collection(const ObjectCollection& c) {
  double maxsz = 0;
  for (const auto& o : c.objects) maxsz = std::max(maxsz, object_size(o));
  if (maxsz <= 1.0) return {c, 1.0};
  const double f = 1.0 / maxsz;
  ObjectCollection out;
  out.dimension = c.dimension;
  out.kind = c.kind;
  out.params = c.params;
  if (out.params.radius) *out.params.radius *= f;
  if (out.params.width) *out.params.width *= f;
  out.objects.reserve(c.objects.size());
  for (const auto& o : c.objects) out.objects.push_back(scale_object(o, f));
  return {out, f};
}

bool object_intersects_axis_box(const GeometricObject& o, const Point& lo,
                                const Point& hi) {
  struct Visitor {
    const Point& lo;
    const Point& hi;
    bool operator()(const Disk& d) const {
      return disk_box(d, Box{lo, hi});
    }
    bool operator()(const Box& b) const { return box_box(b, Box{lo, hi}); }
    bool operator()(const GridPath& p) const {
      for (std::size_t i = 0; i + 1 < p.pts.size(); ++i) {
        const auto& a = p.pts[i];
        const auto& b = p.pts[i + 1];
        const double xlo = double(std::min(a[0], b[0])), xhi = double(std::max(a[0], b[0]));
        const double ylo = double(std::min(a[1], b[1])), yhi = double(std::max(a[1], b[1]));
        if (xlo <= hi[0] + kGeomEps && lo[0] <= xhi + kGeomEps &&
            ylo <= hi[1] + kGeomEps && lo[1] <= yhi + kGeomEps)
          return true;
      }
      if (p.pts.size() == 1) {
        const double x = double(p.pts[0][0]), y = double(p.pts[0][1]);
        return x >= lo[0] - kGeomEps && x <= hi[0] + kGeomEps &&
               y >= lo[1] - kGeomEps && y <= hi[1] + kGeomEps;
      }
      return false;
    }
    bool operator()(const UnionObject& u) const {
      for (const auto& m : u.members)
        if (object_intersects_axis_box(m, lo, hi)) return true;
      return false;
    }
  };
  return std::visit(Visitor{lo, hi}, o.shape);
}

GeometricObject translate_object(const GeometricObject& o, const Point& shift) {
  struct Visitor {
    const Point& shift;
    GeometricObject operator()(const Disk& d) const {
      Disk s = d;
      for (std::size_t j = 0; j < s.center.size(); ++j) s.center[j] += shift[j];
      return GeometricObject{s};
    }
    GeometricObject operator()(const Box& b) const {
      Box s = b;
      for (std::size_t j = 0; j < s.lo.size(); ++j) {
        s.lo[j] += shift[j];
        s.hi[j] += shift[j];
      }
      return GeometricObject{s};
    }
    GeometricObject operator()(const GridPath& p) const {
      const long long dx = std::llround(shift[0]);
      const long long dy = std::llround(shift[1]);
      if (std::abs(shift[0] - double(dx)) > kGeomEps ||
          std::abs(shift[1] - double(dy)) > kGeomEps)
        throw std::invalid_argument("grid paths require integer translation");
      GridPath s = p;
      for (auto& q : s.pts) {
        q[0] += dx;
        q[1] += dy;
      }
      return GeometricObject{s};
    }
    GeometricObject operator()(const UnionObject& u) const {
      UnionObject s;
      s.members.reserve(u.members.size());
      for (const auto& m : u.members) s.members.push_back(translate_object(m, shift));
      return GeometricObject{s};
    }
  };
  return std::visit(Visitor{shift}, o.shape);
}

ObjectCollection translate_collection(const ObjectCollection& c, const Point& shift) {
  ObjectCollection out = c;
  for (auto& o : out.objects) o = translate_object(o, shift);
  return out;
}

std::optional<std::string> validate_collection(const ObjectCollection& c) {
  if (c.dimension < 2) return "dimension must be >= 2";
  for (std::size_t i = 0; i < c.objects.size(); ++i) {
    const auto& o = c.objects[i];
    if (o.dimension() != c.dimension)
      return "object " + std::to_string(i) + " has wrong dimension";
    if (const auto* p = std::get_if<GridPath>(&o.shape)) {
      if (p->pts.empty()) return "object " + std::to_string(i) + " is an empty path";
      for (std::size_t k = 0; k + 1 < p->pts.size(); ++k) {
        const bool dx = p->pts[k][0] != p->pts[k + 1][0];
        const bool dy = p->pts[k][1] != p->pts[k + 1][1];
        if (dx == dy)
          return "object " + std::to_string(i) + " has a non-axis-aligned or empty segment";
      }
    }
    if (const auto* u = std::get_if<UnionObject>(&o.shape)) {
      // Connectivity of the member chain via BFS on pairwise intersection.
      const std::size_t m = u->members.size();
      if (m == 0) return "object " + std::to_string(i) + " is an empty union";
      std::vector<char> seen(m, 0);
      std::vector<std::size_t> stack{0};
      seen[0] = 1;
      std::size_t reached = 1;
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < m; ++w) {
          if (!seen[w] && intersects(u->members[v], u->members[w])) {
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
          }
        }
      }
      if (reached != m) return "object " + std::to_string(i) + " is a disconnected union";
    }
  }
  const bool path_kind =
      c.kind == CollectionKind::GridPathsV || c.kind == CollectionKind::GridPathsE;
  for (std::size_t i = 0; i < c.objects.size(); ++i) {
    const auto& o = c.objects[i];
    switch (c.kind) {
      case CollectionKind::UnitDisks: {
        const auto* d = std::get_if<Disk>(&o.shape);
        if (!d) return "unit-disk collection holds a non-disk at " + std::to_string(i);
        if (c.params.radius && std::abs(d->radius - *c.params.radius) > kGeomEps)
          return "disk " + std::to_string(i) + " deviates from the shared radius";
        break;
      }
      case CollectionKind::UnitWidthRects: {
        const auto* b = std::get_if<Box>(&o.shape);
        if (!b) return "rect collection holds a non-box at " + std::to_string(i);
        if (c.params.width &&
            std::abs((b->hi[0] - b->lo[0]) - *c.params.width) > kGeomEps)
          return "rect " + std::to_string(i) + " deviates from the shared width";
        break;
      }
      case CollectionKind::GridPathsV:
      case CollectionKind::GridPathsE: {
        const auto* p = std::get_if<GridPath>(&o.shape);
        if (!p) return "path collection holds a non-path at " + std::to_string(i);
        if (c.params.horiz_bound) {
          auto [xlo, xhi] = horizontal_part(o);
          if (xhi - xlo > double(*c.params.horiz_bound) + kGeomEps)
            return "path " + std::to_string(i) + " exceeds the horizontal budget";
        }
        if (c.kind == CollectionKind::GridPathsE && p->pts.size() < 2)
          return "path " + std::to_string(i) +
                 " has no edge (not allowed in edge mode)";
        break;
      }
      case CollectionKind::SimilarlySizedFat:
      case CollectionKind::Generic:
        break;
    }
  }
  if (c.kind == CollectionKind::SimilarlySizedFat && c.params.size_ratio &&
      !c.objects.empty()) {
    double dmin = object_diameter(c.objects[0]), dmax = dmin;
    for (const auto& o : c.objects) {
      const double d = object_diameter(o);
      dmin = std::min(dmin, d);
      dmax = std::max(dmax, d);
    }
    if (dmax > *c.params.size_ratio * dmin + kGeomEps)
      return "diameter ratio exceeds the declared bound";
  }
  (void)path_kind;
  return std::nullopt;
}

std::vector<std::array<long long, 2>> grid_path_points(const GridPath& p) {
  std::vector<std::array<long long, 2>> out;
  if (p.pts.empty()) return out;
  out.push_back(p.pts[0]);
  for (std::size_t i = 0; i + 1 < p.pts.size(); ++i) {
    auto a = p.pts[i];
    const auto& b = p.pts[i + 1];
    const long long dx = (b[0] > a[0]) - (b[0] < a[0]);
    const long long dy = (b[1] > a[1]) - (b[1] < a[1]);
    while (a != b) {
      a[0] += dx;
      a[1] += dy;
      out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::array<long long, 4>> grid_path_edges(const GridPath& p) {
  std::vector<std::array<long long, 4>> out;
  for (std::size_t i = 0; i + 1 < p.pts.size(); ++i) {
    auto a = p.pts[i];
    const auto& b = p.pts[i + 1];
    const long long dx = (b[0] > a[0]) - (b[0] < a[0]);
    const long long dy = (b[1] > a[1]) - (b[1] < a[1]);
    while (a != b) {
      std::array<long long, 2> next{a[0] + dx, a[1] + dy};
      std::array<long long, 4> e{a[0], a[1], next[0], next[1]};
      if (std::array<long long, 2>{e[2], e[3]} < std::array<long long, 2>{e[0], e[1]})
        e = {e[2], e[3], e[0], e[1]};
      out.push_back(e);
      a = next;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace treealpha
