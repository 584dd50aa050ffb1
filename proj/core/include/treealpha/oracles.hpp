#pragma once

#include <stdexcept>
#include <vector>

#include "treealpha/graph.hpp"
#include "treealpha/rational.hpp"

namespace treealpha {

/// Thrown when a work or size guard trips. Callers can widen the guard
/// explicitly; nothing ever silently returns an unverified answer.
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlphaGuard {
  int max_subset = 512;               // hard bitset capacity
  long long node_budget = 50'000'000; // branch-and-bound expansions
};

/// Exact independence number of the subgraph induced on `subset`
/// (branch and bound with a min-degree reduction; deterministic).
int independence_number(const Graph& g, const std::vector<int>& subset,
                        const AlphaGuard& guard = {});

struct BruteForceResult {
  std::vector<int> chosen;  // sorted vertex (or member-index) set
  Weight weight;
};

/// Exhaustive max-weight independent set. Ties break toward the
/// lexicographically smallest sorted vertex set (prefix counts as
/// smaller). Guarded by max_n (default 30, overridable).
BruteForceResult bruteforce_mwis(const WeightedGraph& wg, int max_n = 30);

/// Exhaustive max-weight distance-d packing of family members: selected
/// members must be pairwise at distance >= d in g (d >= 2 even; d = 2
/// means vertex-disjoint with no joining edge). Guarded by max_members
/// (default 20, overridable).
BruteForceResult bruteforce_packing(const Graph& g, const SubgraphFamily& fam,
                                    int d, int max_members = 20);

/// Distance between two vertex sets in g (min over pairs; -1 if disconnected).
int set_distance(const Graph& g, const std::vector<int>& a, const std::vector<int>& b);

/// True iff sorted set `a` precedes sorted set `b` lexicographically,
/// with a proper prefix preceding its extension.
bool lex_less(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace treealpha
