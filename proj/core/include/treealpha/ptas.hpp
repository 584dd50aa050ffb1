#pragma once

#include <string>
#include <vector>

#include "treealpha/fat_cover.hpp"
#include "treealpha/layered.hpp"
#include "treealpha/solver.hpp"

namespace treealpha {

/// Outcome of an approximation driver: an exact solution of a restricted
/// instance together with the fraction of the true optimum it provably
/// attains.
struct PtasReport {
  DpSolution solution;
  Weight ratio = Weight(0);   // proven guarantee: weight >= ratio * OPT
  std::string method;
  int chosen_shift = -1;      // winning cover element / deletion shift
  int shift_count = 0;
  long long alpha_bound = 0;  // independence bound the exact solves ran under
};

/// Packing approximation over an arbitrary general cover: members confined
/// to one element, exact conflict solve per element, best element wins.
/// Guarantee 1 - h*(1-beta) where h is the largest member size.
PtasReport ptas_packing_from_cover(const Graph& g, const SubgraphFamily& fam,
                                   const GeneralCover& cover,
                                   std::size_t max_states = default_max_states());

/// Weighted independent set of a fat collection's intersection graph via the
/// shifted-grid cover: guarantee 1 - 1/r0.
PtasReport ptas_mwis_fat(const ObjectCollection& c, const std::vector<Weight>& weights,
                         long long r0, long long cfat,
                         std::size_t max_states = default_max_states());

/// Distance-d packing (d even) from a layered decomposition with layered
/// independence <= ell: ball-lift to the (d-1)-th power, carve the lifted
/// layering into r cover elements, exact per-element conflict solves.
/// Guarantee 1 - h/r.
PtasReport ptas_distance_d(const Graph& g, const TreeDecomposition& td,
                           const Layering& l, long long ell,
                           const SubgraphFamily& fam, int dist, int r,
                           std::size_t max_states = default_max_states());

/// Weighted independent set of lattice paths with horizontal extent <= ell:
/// k = ceil(1/eps) shifts, shift s removes every path with a horizontal step
/// crossing a column boundary at s*ell mod k*ell.  Survivor components span
/// at most k*ell columns and are solved exactly on strip decompositions.
PtasReport ptas_mwis_shifting_paths(const ObjectCollection& c,
                                    const std::vector<Weight>& weights, double eps,
                                    std::size_t max_states = default_max_states());

/// Weighted independent set for shared-radius disks (k = ceil(3/eps)) or
/// shared-width boxes (k = ceil(2/eps)): shift s removes objects meeting
/// every k-th vertical slab of the object width; survivors fit windows of
/// k-1 slabs and are solved exactly on strip decompositions.
PtasReport ptas_mwis_shifting_geom(const ObjectCollection& c,
                                   const std::vector<Weight>& weights, double eps,
                                   std::size_t max_states = default_max_states());

/// Exact maximum-weight set at pairwise distance >= dist (dist even; dist=2
/// is the plain independent set) in time exponential only in sqrt(k*n):
/// lift the layered decomposition to the needed power, compress it to
/// independence O(sqrt(k*n)), then run the solver.
DpSolution subexp_exact(const Graph& g, const TreeDecomposition& td, const Layering& l,
                        int k, const std::vector<Weight>& weights, int dist,
                        std::size_t max_states = default_max_states());

}  // namespace treealpha
