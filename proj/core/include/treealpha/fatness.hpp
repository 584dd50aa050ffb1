#pragma once

#include <cstdint>

#include "treealpha/geometry.hpp"

namespace treealpha {

/// Number of objects of size >= `size` meeting the axis-aligned square of the
/// given side length centred at `center`.  This is the quantity a fatness
/// constant bounds uniformly over all squares.
long long fatness_count_at(const ObjectCollection& c, const Point& center, double size);

/// Randomized lower-bound estimate of the fatness constant: probes squares at
/// object corners, centres and random interior points, side length equal to the
/// probed object's size.  The true constant is >= the returned value; for the
/// shapes produced by the generators the estimate is usually tight in practice.
long long estimate_fatness(const ObjectCollection& c, int probes_per_object = 16,
                           std::uint64_t seed = 7);

}  // namespace treealpha
