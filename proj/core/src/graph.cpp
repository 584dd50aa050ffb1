#include "treealpha/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "treealpha/oracles.hpp"

namespace treealpha {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self loops are not allowed");
  if (u < 0 || v < 0 || u >= n() || v >= n())
    throw std::invalid_argument("edge endpoint out of range");
  auto& au = adj_[std::size_t(u)];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return;
  au.insert(it, v);
  auto& av = adj_[std::size_t(v)];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
}

long long Graph::m() const {
  long long s = 0;
  for (const auto& a : adj_) s += static_cast<long long>(a.size());
  return s / 2;
}

bool Graph::has_edge(int u, int v) const {
  const auto& a = adj_[std::size_t(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[std::size_t(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int SubgraphFamily::max_member_size() const {
  std::size_t h = 0;
  for (const auto& m : members) h = std::max(h, m.size());
  return static_cast<int>(h);
}

std::vector<int> Separation::separator() const {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

Graph intersection_graph(const ObjectCollection& c, PathMode mode) {
  return intersection_graph(c, mode, false);
}

Graph intersection_graph(const ObjectCollection& c, PathMode mode, bool) {
  if (auto err = validate_collection(c))
    throw std::invalid_argument("invalid collection: " + *err);
  if (c.kind == CollectionKind::GridPathsE) mode = PathMode::Edge;
  if (c.kind == CollectionKind::GridPathsV) mode = PathMode::Vertex;
  const int n = static_cast<int>(c.objects.size());
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (intersects(c.objects[std::size_t(i)], c.objects[std::size_t(j)], mode))
        g.add_edge(i, j);
  return g;
}

Graph graph_power(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("graph power needs p >= 1");
  const int n = g.n();
  Graph out(n);
  for (int s = 0; s < n; ++s) {
    // Truncated BFS to depth p.
    std::vector<int> dist(std::size_t(n), -1);
    std::queue<int> q;
    dist[std::size_t(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      if (dist[std::size_t(v)] == p) continue;
      for (int w : g.neighbors(v)) {
        if (dist[std::size_t(w)] < 0) {
          dist[std::size_t(w)] = dist[std::size_t(v)] + 1;
          q.push(w);
        }
      }
    }
    for (int v = s + 1; v < n; ++v)
      if (dist[std::size_t(v)] > 0) out.add_edge(s, v);
  }
  return out;
}

Graph conflict_graph(const Graph& g, const SubgraphFamily& fam) {
  const int k = static_cast<int>(fam.members.size());
  for (const auto& mem : fam.members) {
    if (mem.empty()) throw std::invalid_argument("empty family member");
    if (connected_components_within(g, mem).size() != 1)
      throw std::invalid_argument("family member is not connected in the host graph");
  }
  // member_of[v]: members containing v.
  std::vector<std::vector<int>> member_of(std::size_t(g.n()));
  for (int j = 0; j < k; ++j)
    for (int v : fam.members[std::size_t(j)]) member_of[std::size_t(v)].push_back(j);

  Graph out(k);
  for (int j = 0; j < k; ++j) {
    std::vector<char> hit(std::size_t(k), 0);
    for (int v : fam.members[std::size_t(j)]) {
      for (int other : member_of[std::size_t(v)])
        if (other != j) hit[std::size_t(other)] = 1;
      for (int w : g.neighbors(v))
        for (int other : member_of[std::size_t(w)])
          if (other != j) hit[std::size_t(other)] = 1;
    }
    for (int other = j + 1; other < k; ++other)
      if (hit[std::size_t(other)]) out.add_edge(j, other);
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, const std::vector<int>& sources) {
  std::vector<int> dist(std::size_t(g.n()), -1);
  std::queue<int> q;
  for (int s : sources) {
    if (dist[std::size_t(s)] < 0) {
      dist[std::size_t(s)] = 0;
      q.push(s);
    }
  }
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (dist[std::size_t(w)] < 0) {
        dist[std::size_t(w)] = dist[std::size_t(v)] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

std::vector<int> closed_ball(const Graph& g, int v, int r) {
  auto dist = bfs_distances(g, {v});
  std::vector<int> out;
  for (int u = 0; u < g.n(); ++u)
    if (dist[std::size_t(u)] >= 0 && dist[std::size_t(u)] <= r) out.push_back(u);
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> all(std::size_t(g.n()));
  std::iota(all.begin(), all.end(), 0);
  return connected_components_within(g, all);
}

std::vector<std::vector<int>> connected_components_within(
    const Graph& g, const std::vector<int>& subset) {
  std::vector<char> in(std::size_t(g.n()), 0), seen(std::size_t(g.n()), 0);
  for (int v : subset) in[std::size_t(v)] = 1;
  std::vector<std::vector<int>> comps;
  for (int s : subset) {
    if (seen[std::size_t(s)]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    seen[std::size_t(s)] = 1;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (in[std::size_t(w)] && !seen[std::size_t(w)]) {
          seen[std::size_t(w)] = 1;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> index(std::size_t(g.n()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    index[std::size_t(vertices[i])] = static_cast<int>(i);
  Graph out(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int w : g.neighbors(vertices[i])) {
      const int j = index[std::size_t(w)];
      if (j > static_cast<int>(i)) out.add_edge(static_cast<int>(i), j);
    }
  return out;
}

Graph make_grid_graph(int rows, int cols) {
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  return g;
}

Graph make_biclique(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

SubgraphFamily singleton_family(const Graph& g, const std::vector<Weight>* weights) {
  SubgraphFamily fam;
  for (int v = 0; v < g.n(); ++v) {
    fam.members.push_back({v});
    fam.weights.push_back(weights ? (*weights)[std::size_t(v)] : Weight(1));
  }
  return fam;
}

SubgraphFamily edge_family(const Graph& g) {
  SubgraphFamily fam;
  for (auto [u, v] : g.edges()) {
    fam.members.push_back({u, v});
    fam.weights.emplace_back(1);
  }
  return fam;
}

SubgraphFamily dissociation_family(const Graph& g) {
  SubgraphFamily fam;
  for (int v = 0; v < g.n(); ++v) {
    fam.members.push_back({v});
    fam.weights.emplace_back(1);
  }
  for (auto [u, v] : g.edges()) {
    fam.members.push_back({u, v});
    fam.weights.emplace_back(2);
  }
  return fam;
}

SubgraphFamily connected_family(const Graph& g, int h, std::size_t cap) {
  if (h < 1) throw std::invalid_argument("member size bound must be >= 1");
  SubgraphFamily fam;
  std::set<std::vector<int>> seen;
  // Grow connected sets from each start vertex; canonical sorted form
  // dedups across starts.
  std::vector<int> cur;
  auto emit = [&](const std::vector<int>& set) {
    std::vector<int> key = set;
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) {
      if (seen.size() > cap) throw GuardExceeded("connected family exceeds cap");
      fam.members.push_back(key);
      fam.weights.emplace_back(static_cast<long long>(key.size()));
    }
  };
  // BFS-style enumeration: extend by neighbours of the current set.
  std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& set) {
    emit(set);
    if (static_cast<int>(set.size()) == h) return;
    std::vector<int> cand;
    for (int v : set)
      for (int w : g.neighbors(v))
        if (std::find(set.begin(), set.end(), w) == set.end()) cand.push_back(w);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (int w : cand) {
      // Only extend by vertices above the minimum to avoid some repeats;
      // dedup set handles the rest.
      set.push_back(w);
      grow(set);
      set.pop_back();
    }
  };
  for (int v = 0; v < g.n(); ++v) {
    cur = {v};
    grow(cur);
  }
  return fam;
}

namespace {

bool iso_extend(const Graph& a, const Graph& b, std::vector<int>& map,
                std::vector<char>& used, int v) {
  const int n = a.n();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[std::size_t(w)]) continue;
    if (a.neighbors(v).size() != b.neighbors(w).size()) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (a.has_edge(u, v) != b.has_edge(map[std::size_t(u)], w)) ok = false;
    if (!ok) continue;
    map[std::size_t(v)] = w;
    used[std::size_t(w)] = 1;
    if (iso_extend(a, b, map, used, v + 1)) return true;
    used[std::size_t(w)] = 0;
  }
  return false;
}

}  // namespace

bool is_isomorphic_small(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.n(); ++v) da.push_back(static_cast<int>(a.neighbors(v).size()));
  for (int v = 0; v < b.n(); ++v) db.push_back(static_cast<int>(b.neighbors(v).size()));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map(std::size_t(a.n()), -1);
  std::vector<char> used(std::size_t(a.n()), 0);
  return iso_extend(a, b, map, used, 0);
}

}  // namespace treealpha
