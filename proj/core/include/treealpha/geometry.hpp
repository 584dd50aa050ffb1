#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace treealpha {

/// Comparison slack for floating-point coordinates. Touching objects
/// (distance exactly equal to the sum of radii, shared box faces) count
/// as intersecting; anything within this slack of touching does too.
inline constexpr double kGeomEps = 1e-9;

using Point = std::vector<double>;  // one coordinate per axis, dimension >= 2

struct Disk {
  Point center;
  double radius = 0.0;
};

struct Box {
  Point lo;
  Point hi;  // lo[j] <= hi[j] per axis; degenerate (zero-extent) axes allowed
};

/// Axis-aligned lattice path in the plane: traversal-order segment
/// endpoints (endpoints of the path plus bend points). A single point is a
/// legal (degenerate) path; consecutive points differ in exactly one axis.
struct GridPath {
  std::vector<std::array<long long, 2>> pts;
};

struct GeometricObject;

/// Union of objects forming one connected region (every member reachable
/// from every other through a chain of pairwise-intersecting members).
struct UnionObject {
  std::vector<GeometricObject> members;
};

struct GeometricObject {
  std::variant<Disk, Box, GridPath, UnionObject> shape;

  int dimension() const;
  bool is_grid_path() const { return std::holds_alternative<GridPath>(shape); }
};

/// How grid paths are considered adjacent: sharing a lattice point, or
/// sharing a full lattice edge.
enum class PathMode { Vertex, Edge };

enum class CollectionKind {
  UnitDisks,
  SimilarlySizedFat,
  UnitWidthRects,
  GridPathsV,
  GridPathsE,
  Generic,
};

std::string kind_name(CollectionKind kind);
CollectionKind kind_from_name(const std::string& name);

/// Declared parameters of a collection. Only the fields that apply to the
/// kind are set; declared values are promises used by constructions (the
/// shared radius, the shared width, the size ratio, the fatness constant,
/// the horizontal-extent budget of paths).
struct CollectionParams {
  std::optional<double> radius;
  std::optional<double> width;
  std::optional<double> size_ratio;
  std::optional<double> fatness;
  std::optional<long long> horiz_bound;
};

struct ObjectCollection {
  int dimension = 2;
  CollectionKind kind = CollectionKind::Generic;
  CollectionParams params;
  std::vector<GeometricObject> objects;
};

/// Closed-set intersection test with kGeomEps slack. `mode` only matters
/// for path/path pairs. Mixing grid paths with disks or boxes is
/// unsupported and throws; dimensions must agree.
bool intersects(const GeometricObject& a, const GeometricObject& b,
                PathMode mode = PathMode::Vertex);

/// Bounding box (per-axis min/max of the object).
std::pair<Point, Point> bounding_box(const GeometricObject& o);

/// Side length of the smallest enclosing axis-aligned hypercube
/// (max bounding-box extent). Zero for degenerate point objects.
double object_size(const GeometricObject& o);

/// Euclidean diameter (exact per variant: disks 2r, boxes the diagonal,
/// paths the max vertex distance, unions bounded by the bbox diagonal).
double object_diameter(const GeometricObject& o);

/// Projection onto the first axis as a closed interval [lo, hi].
std::pair<double, double> horizontal_part(const GeometricObject& o);

/// Scale index: largest i with size <= (1/r)^i, i.e. floor(log_{1/r} size).
/// Requires 0 < size <= 1 and r >= 2. Sizes within 1e-12 of an exact power
/// of 1/r snap to that exponent.
int rank_of(const GeometricObject& o, int r);

/// Uniformly rescales so the max object size becomes 1; returns the scaled
/// collection and the applied factor. No-op (factor 1) when every size is
/// already <= 1. Grid-path collections cannot be rescaled (lattice).
std::pair<ObjectCollection, double> scale_collection(const ObjectCollection& c);

/// Exact closed-box intersection test per variant (not the bbox proxy:
/// a disk whose bounding box clips a corner of the probe is handled
/// correctly via clamped distance).
bool object_intersects_axis_box(const GeometricObject& o, const Point& lo,
                                const Point& hi);

/// Translates every object by `shift` (paths require integer components).
GeometricObject translate_object(const GeometricObject& o, const Point& shift);
ObjectCollection translate_collection(const ObjectCollection& c, const Point& shift);

/// Checks structural invariants: uniform dimension, per-kind promises
/// (shared radius/width, ratio, lattice paths with horizontal extent within
/// the declared budget, connected unions). Returns a message for the first
/// violation, or nullopt.
std::optional<std::string> validate_collection(const ObjectCollection& c);

/// All lattice points covered by a path (segment interiors included).
std::vector<std::array<long long, 2>> grid_path_points(const GridPath& p);

/// All unit lattice edges covered by a path, canonically ordered endpoints.
std::vector<std::array<long long, 4>> grid_path_edges(const GridPath& p);

}  // namespace treealpha
