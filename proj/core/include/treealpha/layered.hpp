#pragma once

#include <string>
#include <vector>

#include "treealpha/decomposition.hpp"
#include "treealpha/geometry.hpp"

namespace treealpha {

/// Shared strip machinery: the 2n sorted second-axis endpoint values and
/// the derived 4n-2 horizontal strips (path-shaped decomposition), plus
/// the vertical strip width that defines layers.
struct StripStructure {
  std::vector<double> breakpoints;  // sorted projection endpoints, size 2n
  double vertical_width = 0.0;      // layer strips are [ (j-1)*w, j*w )
  int strip_count() const { return static_cast<int>(2 * breakpoints.size()) - 2; }
  /// Closed y-range of strip i (1-based, 1..4n-2).
  std::pair<double, double> strip_range(int i) const;
};

/// A layered decomposition together with its construction provenance.
struct LayeredDecomposition {
  TreeDecomposition td;
  Layering layering;
  long long declared_bound = 0;  // promised per-(bag, layer) independence
  std::string method;
  StripStructure strips;
};

/// Similarly-sized fat objects (diameters within factor `ratio`, declared
/// fatness `cfat`): vertical strips of width ratio * d_min; bound
/// ceil(2*sqrt(2)*ratio) * cfat.
LayeredDecomposition layered_td_fat_similar(const ObjectCollection& c,
                                            double ratio, long long cfat);

/// Disks of one shared radius: strips of width 2r; bound 3.
LayeredDecomposition layered_td_unit_disks(const ObjectCollection& c);

/// Axis-aligned boxes of one shared width: strips of that width; bound 1.
LayeredDecomposition layered_td_unit_rects(const ObjectCollection& c);

/// Lattice paths with horizontal extent <= ell: strips of width ell;
/// bound 2*ell (point adjacency) or 6*ell-1 (edge adjacency).
LayeredDecomposition layered_td_grid_paths(const ObjectCollection& c,
                                           long long ell, PathMode mode);

/// Dispatch on the collection kind (params supply ratio/fatness/ell).
LayeredDecomposition layered_td_auto(const ObjectCollection& c);

/// Windowed variant: when the whole realization fits in a vertical window
/// of width <= ell, the path-shaped strip decomposition alone has bounded
/// independence (no layering needed). Bounds: disks of radius r:
/// 3*ceil(ell/(2r)); boxes of width c: ceil(ell/c); lattice paths over at
/// most ell columns (ell integral): ell (point mode) or 3*ell-1 (edge mode).
struct StripTd {
  TreeDecomposition td;
  long long declared_bound = 0;
  std::string method;
};
StripTd strip_td(const ObjectCollection& c, double ell);

}  // namespace treealpha
