#pragma once

#include <utility>
#include <vector>

#include "treealpha/geometry.hpp"
#include "treealpha/rational.hpp"

namespace treealpha {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(std::size_t(n)) {}
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  void add_edge(int u, int v);
  int n() const { return static_cast<int>(adj_.size()); }
  long long m() const;
  const std::vector<int>& neighbors(int v) const { return adj_[std::size_t(v)]; }
  bool has_edge(int u, int v) const;
  /// Edges as sorted (u, v) pairs with u < v.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
};

struct WeightedGraph {
  Graph graph;
  std::vector<Weight> weights;  // one non-negative weight per vertex
};

/// Family of connected vertex subsets of a host graph, each with a weight.
struct SubgraphFamily {
  std::vector<std::vector<int>> members;  // sorted vertex lists
  std::vector<Weight> weights;

  int max_member_size() const;
};

/// Two-sided separation: V = A ∪ B, separator A ∩ B, no edge between
/// A \ B and B \ A.
struct Separation {
  std::vector<int> a;  // sorted
  std::vector<int> b;  // sorted

  std::vector<int> separator() const;
};

/// Intersection graph of a collection: vertex i per object, edge when the
/// objects intersect (mode applies to grid-path collections).
Graph intersection_graph(const ObjectCollection& c,
                         PathMode mode = PathMode::Vertex);
Graph intersection_graph(const ObjectCollection& c, PathMode mode,
                         bool parallel);

/// G^p: edge between distinct vertices at distance <= p. p >= 1.
Graph graph_power(const Graph& g, int p);

/// Conflict graph of a family: members adjacent when they share a vertex
/// or an edge of g joins them. Members must be connected in g.
Graph conflict_graph(const Graph& g, const SubgraphFamily& fam);

/// BFS distances from a set of sources; unreachable = -1.
std::vector<int> bfs_distances(const Graph& g, const std::vector<int>& sources);

/// Vertices at distance <= r from v (the closed ball), sorted.
std::vector<int> closed_ball(const Graph& g, int v, int r);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);
/// Components of the graph induced on `subset` (labels are original ids).
std::vector<std::vector<int>> connected_components_within(
    const Graph& g, const std::vector<int>& subset);

/// Induced subgraph on sorted `vertices`; vertex i of the result is
/// vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// rows x cols grid graph (vertex r*cols+c), for oracle comparisons.
Graph make_grid_graph(int rows, int cols);
/// Complete bipartite K_{a,b}: vertices 0..a-1 vs a..a+b-1.
Graph make_biclique(int a, int b);

/// Family builders over g. Weight of each member defaults to its size.
SubgraphFamily singleton_family(const Graph& g,
                                const std::vector<Weight>* weights = nullptr);
SubgraphFamily edge_family(const Graph& g);
/// All K1 and K2 subgraphs (dissociation-style packing with h = 2).
SubgraphFamily dissociation_family(const Graph& g);
/// Every connected subset of size <= h (guarded; throws when the count
/// would exceed `cap`).
SubgraphFamily connected_family(const Graph& g, int h, std::size_t cap = 200000);

/// Backtracking isomorphism check for small graphs (<= ~16 vertices).
bool is_isomorphic_small(const Graph& a, const Graph& b);

}  // namespace treealpha
