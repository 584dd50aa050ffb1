#pragma once

// Shared fixtures for the test binaries: seeded random graphs, random
// valid tree decompositions (elimination-order based, then fattened),
// and feasibility checks used by several suites.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "treealpha/decomposition.hpp"
#include "treealpha/generators.hpp"
#include "treealpha/graph.hpp"
#include "treealpha/oracles.hpp"
#include "treealpha/rng.hpp"

namespace ta = treealpha;

inline ta::Graph random_graph(ta::SplitMix64& rng, int n, double p) {
  ta::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_double() < p) g.add_edge(u, v);
  return g;
}

inline std::vector<ta::Weight> random_weights(ta::SplitMix64& rng, int n) {
  std::vector<ta::Weight> w;
  w.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    w.emplace_back(rng.next_int(1, 20), rng.next_int(1, 6));
  return w;
}

/// Valid decomposition from a random elimination ordering (fill-in bags,
/// parent = earliest-eliminated later neighbour), optionally fattened by
/// copying vertices across tree edges — stays valid, stops being minimal.
inline ta::TreeDecomposition random_valid_td(ta::SplitMix64& rng, const ta::Graph& g,
                                             int fatten_steps = 8) {
  const int n = g.n();
  ta::TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    return td;
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(order[static_cast<std::size_t>(i)],
              order[static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(i + 1)))]);
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

  std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }
  td.bags.assign(static_cast<std::size_t>(n), {});
  for (int step = 0; step < n; ++step) {
    const int v = order[static_cast<std::size_t>(step)];
    std::vector<int> later;
    for (int w : adj[static_cast<std::size_t>(v)])
      if (pos[static_cast<std::size_t>(w)] > step) later.push_back(w);
    auto& bag = td.bags[static_cast<std::size_t>(step)];
    bag = later;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    for (int a : later)
      for (int b : later)
        if (a != b) adj[static_cast<std::size_t>(a)].insert(b);
    if (!later.empty()) {
      int par = later.front();
      for (int w : later)
        if (pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(par)]) par = w;
      td.tree_edges.emplace_back(step, pos[static_cast<std::size_t>(par)]);
    } else if (step + 1 < n) {
      td.tree_edges.emplace_back(step, step + 1);
    }
  }
  for (int s = 0; s < fatten_steps && !td.tree_edges.empty(); ++s) {
    const auto [a, b] = td.tree_edges[static_cast<std::size_t>(
        rng.next_below(td.tree_edges.size()))];
    const int from = rng.next() & 1 ? a : b;
    const int into = from == a ? b : a;
    const auto& src = td.bags[static_cast<std::size_t>(from)];
    auto& dst = td.bags[static_cast<std::size_t>(into)];
    const int v = src[static_cast<std::size_t>(rng.next_below(src.size()))];
    if (!std::binary_search(dst.begin(), dst.end(), v))
      dst.insert(std::upper_bound(dst.begin(), dst.end(), v), v);
  }
  return td;
}

inline bool is_independent(const ta::Graph& g, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) return false;
  return true;
}

inline ta::Weight total_weight(const std::vector<ta::Weight>& w, const std::vector<int>& s) {
  ta::Weight t(0);
  for (int v : s) t += w[static_cast<std::size_t>(v)];
  return t;
}

/// Pairwise host-graph distance of the chosen family members is >= d.
inline bool is_valid_packing(const ta::Graph& g, const ta::SubgraphFamily& fam,
                             const std::vector<int>& chosen, int d) {
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (std::size_t j = i + 1; j < chosen.size(); ++j) {
      const int dist = ta::set_distance(g, fam.members[static_cast<std::size_t>(chosen[i])],
                                        fam.members[static_cast<std::size_t>(chosen[j])]);
      if (dist >= 0 && dist < d) return false;
    }
  return true;
}

inline ta::ObjectCollection make_instance(const std::string& kind, int n,
                                          std::uint64_t seed, double window = 0.0) {
  ta::GeneratorSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.seed = seed;
  spec.window = window;
  return ta::generate_instance(spec);
}
