#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treealpha/graph.hpp"
#include "treealpha/oracles.hpp"
#include "treealpha/rational.hpp"

namespace treealpha {

/// Tree decomposition: one sorted bag per node, tree edges over node ids.
/// Empty bags are legal.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> tree_edges;

  int node_count() const { return static_cast<int>(bags.size()); }
};

/// Ordered partition of the vertices into layers V_1, V_2, ... such that
/// every edge stays within a layer or joins consecutive layers. Stored
/// 1-based conceptually: layers[i] is V_{i+1}. Empty layers are legal;
/// trailing empty layers are trimmed by canonicalize().
struct Layering {
  std::vector<std::vector<int>> layers;

  int layer_count() const { return static_cast<int>(layers.size()); }
  /// Per-vertex layer index (0-based position into `layers`); -1 if absent.
  std::vector<int> layer_index(int n) const;
  void canonicalize();
};

struct CoverElement {
  std::vector<int> vertices;  // sorted
  TreeDecomposition td;       // decomposition of the induced subgraph, original ids
  /// Construction provenance: grid shift vector (hierarchical cover) or
  /// residue (layered cover).
  std::vector<long long> shift;
  std::optional<int> residue;
};

/// Multiset of vertex subsets, each vertex in at least beta * size of them,
/// each equipped with a decomposition whose independence is declared.
struct GeneralCover {
  std::vector<CoverElement> elements;
  Weight beta = Weight(0);
  long long alpha_bound = 0;  // declared per-element independence bound
};

struct TdViolation {
  enum class Kind { NotATree, VertexOutOfRange, VertexUncovered, EdgeUncovered, NotConnected };
  Kind kind;
  int vertex = -1;
  std::pair<int, int> edge{-1, -1};
  std::string message;
};

/// First violated condition (tree shape, vertex coverage, edge coverage,
/// connected occupancy per vertex), or nullopt when valid.
std::optional<TdViolation> validate_td(const Graph& g, const TreeDecomposition& td);

/// Checks exact partition and that every edge spans at most one layer step.
std::optional<std::string> validate_layering(const Graph& g, const Layering& l);

/// Per-vertex membership count must reach beta * |elements| and every
/// element decomposition must be valid for its induced subgraph.
std::optional<std::string> validate_cover(const Graph& g, const GeneralCover& c);

/// Exact max over bags of the induced independence number.
int td_independence_number(const Graph& g, const TreeDecomposition& td,
                           const AlphaGuard& guard = {});

/// Exact max over (bag, layer) intersections.
int layered_independence_number(const Graph& g, const TreeDecomposition& td,
                                const Layering& l, const AlphaGuard& guard = {});

/// Restriction of a decomposition to a vertex subset: same tree, bags
/// intersected (empty bags kept).
TreeDecomposition restrict_td_to_subset(const TreeDecomposition& td,
                                        const std::vector<int>& subset, int n);

/// Joins several decompositions under a fresh hub node with an empty bag.
TreeDecomposition merge_under_hub(const std::vector<TreeDecomposition>& parts);

/// Compresses a layered decomposition with per-(bag,layer) independence
/// <= k into one of independence <= 2*sqrt(k*n): delete the lightest
/// residue class of layers mod p = ceil(sqrt(n/k)), decompose the
/// remaining components by bag restriction, then put the deleted class
/// back into every bag.
TreeDecomposition sqrt_compress(const Graph& g, const TreeDecomposition& td,
                                const Layering& l, int k);

/// r cover elements: element m keeps every layer except those with
/// (i-1) mod r == m. Each vertex lands in exactly r-1 elements; per
/// element, components span < r consecutive layers, so restricted bags
/// have independence <= ell*(r-1). `ell` is the known layered bound.
GeneralCover cover_from_layering(const Graph& g, const TreeDecomposition& td,
                                 const Layering& l, int r, long long ell);

/// Lifts a layered decomposition of g to one of g^(1+2d): bags become
/// distance-d balls around bags, layers are unions of 1+2d consecutive
/// layers. Per-(bag,layer) independence grows to at most (1+4d)k.
std::pair<TreeDecomposition, Layering> lift_td_to_power(
    const Graph& g, const TreeDecomposition& td, const Layering& l, int d);

/// Lifts a decomposition of the host graph to the conflict graph of a
/// family: the new bag holds every member meeting the old bag.
TreeDecomposition lift_td_to_conflict(const Graph& g, const TreeDecomposition& td,
                                      const SubgraphFamily& fam);

struct BalancedSeparation {
  Separation separation;
  int bag_node = -1;          // separator is this bag, verbatim
  int separator_alpha = -1;   // exact independence of the separator
};

/// Balanced separation whose separator is one bag of the decomposition:
/// both strict sides have at most 2n/3 vertices.
BalancedSeparation balanced_separation_from_td(const Graph& g,
                                               const TreeDecomposition& td,
                                               const AlphaGuard& guard = {});

/// Balanced separation from a (1 - 1/(2c))-general cover: separate inside
/// the largest element, then absorb the uncovered rest into both sides.
BalancedSeparation separation_from_cover(const Graph& g, const GeneralCover& cover,
                                         int c, const AlphaGuard& guard = {});

/// Restriction to the closed ball N^r[v]: bags intersected (tree shape
/// kept); per (bag, layer) independence <= ell*(2r+1) for the ball graph.
TreeDecomposition restrict_to_ball(const Graph& g, const TreeDecomposition& td,
                                   int v, int r);

/// Valid decomposition from the min-degree elimination heuristic
/// (no optimality claim; used for arbitrary host graphs).
TreeDecomposition td_from_min_degree(const Graph& g);

}  // namespace treealpha
