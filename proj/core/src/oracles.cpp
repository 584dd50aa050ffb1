#include "treealpha/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace treealpha {

namespace {

/// Fixed-size dynamic bitset over the local indices of a subset.
struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(int n = 0) : w(std::size_t((n + 63) / 64), 0) {}
  void set(int i) { w[std::size_t(i >> 6)] |= 1ULL << (i & 63); }
  bool test(int i) const { return (w[std::size_t(i >> 6)] >> (i & 63)) & 1; }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  int first() const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i]) return int(i) * 64 + std::countr_zero(w[i]);
    return -1;
  }
  void reset(int i) { w[std::size_t(i >> 6)] &= ~(1ULL << (i & 63)); }
  Bits and_not(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] &= ~o.w[i];
    return r;
  }
  int count_and(const Bits& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i) c += std::popcount(w[i] & o.w[i]);
    return c;
  }
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t x = w[i];
      while (x) {
        fn(int(i) * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }
};

struct AlphaSolver {
  std::vector<Bits> adj;
  long long budget;
  int best = 0;

  void run(Bits p, int current) {
    if (--budget < 0) throw GuardExceeded("independence-number node budget exhausted");
    while (true) {
      const int remaining = p.count();
      if (current + remaining <= best) return;
      if (remaining == 0) {
        best = std::max(best, current);
        return;
      }
      // Min-degree reduction: a candidate with at most one candidate
      // neighbour is always safe to take.
      int pick = -1, maxdeg = -1, maxv = -1;
      p.for_each([&](int v) {
        if (pick >= 0) return;
        const int deg = p.count_and(adj[std::size_t(v)]);
        if (deg <= 1) {
          pick = v;
          return;
        }
        if (deg > maxdeg) {
          maxdeg = deg;
          maxv = v;
        }
      });
      if (pick >= 0) {
        auto np = p.and_not(adj[std::size_t(pick)]);
        np.reset(pick);
        p = np;
        ++current;
        best = std::max(best, current);
        continue;
      }
      // Branch on the max-degree candidate: in or out.
      Bits with_v = p.and_not(adj[std::size_t(maxv)]);
      with_v.reset(maxv);
      run(with_v, current + 1);
      p.reset(maxv);
    }
  }
};

}  // namespace

int independence_number(const Graph& g, const std::vector<int>& subset,
                        const AlphaGuard& guard) {
  const int k = static_cast<int>(subset.size());
  if (k > guard.max_subset)
    throw GuardExceeded("subset exceeds the independence-number size guard");
  if (k == 0) return 0;
  std::vector<int> local(std::size_t(g.n()), -1);
  for (int i = 0; i < k; ++i) local[std::size_t(subset[std::size_t(i)])] = i;
  AlphaSolver solver;
  solver.adj.assign(std::size_t(k), Bits(k));
  for (int i = 0; i < k; ++i)
    for (int w : g.neighbors(subset[std::size_t(i)])) {
      const int j = local[std::size_t(w)];
      if (j >= 0) solver.adj[std::size_t(i)].set(j);
    }
  solver.budget = guard.node_budget;
  Bits all(k);
  for (int i = 0; i < k; ++i) all.set(i);
  solver.run(all, 0);
  return solver.best;
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

struct MwisSearch {
  const WeightedGraph* wg;
  std::vector<Weight> suffix;  // total weight of vertices >= i
  std::vector<int> current;
  BruteForceResult best;

  void dfs(int i, const Weight& cur) {
    const int n = wg->graph.n();
    if (i == n) {
      if (cur > best.weight ||
          (cur == best.weight && lex_less(current, best.chosen))) {
        best.weight = cur;
        best.chosen = current;
      }
      return;
    }
    if (cur + suffix[std::size_t(i)] < best.weight) return;
    bool free = true;
    for (int v : current)
      if (wg->graph.has_edge(v, i)) {
        free = false;
        break;
      }
    if (free) {
      current.push_back(i);
      dfs(i + 1, cur + wg->weights[std::size_t(i)]);
      current.pop_back();
    }
    dfs(i + 1, cur);
  }
};

}  // namespace

BruteForceResult bruteforce_mwis(const WeightedGraph& wg, int max_n) {
  const int n = wg.graph.n();
  if (n > max_n) throw GuardExceeded("graph exceeds the brute-force MWIS guard");
  if (static_cast<int>(wg.weights.size()) != n)
    throw std::invalid_argument("weight vector length mismatch");
  for (const auto& w : wg.weights)
    if (w < Weight(0)) throw std::invalid_argument("weights must be non-negative");
  MwisSearch search;
  search.wg = &wg;
  search.suffix.assign(std::size_t(n) + 1, Weight(0));
  for (int i = n - 1; i >= 0; --i)
    search.suffix[std::size_t(i)] = search.suffix[std::size_t(i) + 1] + wg.weights[std::size_t(i)];
  search.best.weight = Weight(-1);
  search.dfs(0, Weight(0));
  return search.best;
}

int set_distance(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
  auto dist = bfs_distances(g, a);
  int best = -1;
  for (int v : b) {
    const int d = dist[std::size_t(v)];
    if (d >= 0 && (best < 0 || d < best)) best = d;
  }
  return best;
}

BruteForceResult bruteforce_packing(const Graph& g, const SubgraphFamily& fam,
                                    int d, int max_members) {
  if (d < 2 || d % 2 != 0)
    throw std::invalid_argument("packing distance must be even and >= 2");
  const int k = static_cast<int>(fam.members.size());
  if (k > max_members) throw GuardExceeded("family exceeds the brute-force packing guard");
  // Pairwise conflicts: members closer than d. A shared vertex is distance 0.
  Graph conflicts(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const int dist = set_distance(g, fam.members[std::size_t(i)], fam.members[std::size_t(j)]);
      if (dist >= 0 && dist < d) conflicts.add_edge(i, j);
    }
  WeightedGraph cw{conflicts, fam.weights};
  return bruteforce_mwis(cw, k);
}

}  // namespace treealpha
