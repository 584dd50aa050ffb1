#pragma once

#include <cstddef>
#include <vector>

#include "treealpha/decomposition.hpp"
#include "treealpha/graph.hpp"
#include "treealpha/oracles.hpp"

namespace treealpha {

/// Node of a nice decomposition: leaves hold empty bags, every other node
/// grows the bag by one vertex, shrinks it by one, or joins two children
/// with identical bags.  The root bag is empty.
struct NiceNode {
  enum class Kind { Leaf, Introduce, Forget, Join };
  Kind kind = Kind::Leaf;
  std::vector<int> bag;  // sorted
  int child1 = -1;
  int child2 = -1;       // Join only
  int vertex = -1;       // Introduce / Forget
};

struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;  // children precede parents
  int root = -1;
};

/// Restructures a valid decomposition into nice form (same bags up to
/// intermediate steps, one introduced/forgotten vertex per node).
NiceTreeDecomposition to_nice(const TreeDecomposition& td);

struct DpSolution {
  std::vector<int> chosen;  // sorted
  Weight weight = Weight(0);
  std::size_t peak_states = 0;  // largest per-node table observed
};

/// Per-node state cap: TREEALPHA_MAX_STATES when set, else 2,000,000.
std::size_t default_max_states();

/// Exact maximum-weight independent set by dynamic programming over the
/// decomposition.  Tables hold one entry per independent subset of a bag, so
/// the cost is governed by the decomposition's independence, not its width.
/// Ties are broken toward the lexicographically smallest vertex set.
/// Throws GuardExceeded when a table would outgrow `max_states`.
DpSolution mwis_on_td(const WeightedGraph& wg, const TreeDecomposition& td,
                      std::size_t max_states = default_max_states());

/// Heaviest subfamily whose members are pairwise disjoint and non-adjacent:
/// an independent set of the conflict graph, solved on the host
/// decomposition lifted to it.
DpSolution max_weight_independent_packing(const Graph& g, const SubgraphFamily& fam,
                                          const TreeDecomposition& td,
                                          std::size_t max_states = default_max_states());

/// Packing at pairwise distance >= dist (even): members conflict when their
/// distance is below dist, i.e. when they touch in G^(dist-1).  The host
/// decomposition is ball-lifted to cover that power before the conflict
/// lift.
DpSolution distance_d_packing_exact(const Graph& g, const SubgraphFamily& fam,
                                    int dist, const TreeDecomposition& td,
                                    std::size_t max_states = default_max_states());

}  // namespace treealpha
