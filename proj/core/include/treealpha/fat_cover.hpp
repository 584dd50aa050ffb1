#pragma once

#include "treealpha/decomposition.hpp"
#include "treealpha/geometry.hpp"

namespace treealpha {

/// Grid arity f(r0) = 2 * ceil(1 / (1 - (1 - 1/r0)^(1/d))).  Chosen so that a
/// d-dimensional object avoiding its rank's grid planes under at least an
/// (1 - 2/f)^d fraction of the (f/2)^d shifts yields coverage >= 1 - 1/r0.
long long fragility_function(long long r0, int d = 2);

/// General cover of a c-fat collection's intersection graph with beta =
/// 1 - 1/r0.  One element per shift vector y in {0..f/2-1}^d of a nested
/// hierarchy of grids (rank-j cells have side f^(1-j)); an object survives a
/// shift when no grid plane of its own rank touches it.  Element bags collect
/// the surviving objects of rank <= j that meet a materialized cell, so every
/// bag has at most cfat * f^(2d) objects, which also caps its independence.
GeneralCover general_cover_fat(const ObjectCollection& c, long long r0, long long cfat);

/// Geometric realization of the odd power G^(2k+1): object v becomes the
/// union of the original objects within graph distance k of v.  The result is
/// declared (3^d * (2k+1)^d * cfat)-fat, with cfat taken from the input
/// collection's declared fatness.
ObjectCollection odd_power_fat_realization(const ObjectCollection& c, int k);

}  // namespace treealpha
