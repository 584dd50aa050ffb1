#include "treealpha/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace treealpha {

namespace {

std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& td) {
  std::vector<std::vector<int>> adj(std::size_t(td.node_count()));
  for (auto [a, b] : td.tree_edges) {
    adj[std::size_t(a)].push_back(b);
    adj[std::size_t(b)].push_back(a);
  }
  return adj;
}

bool edges_form_tree(const TreeDecomposition& td) {
  const int t = td.node_count();
  if (t == 0) return false;
  if (static_cast<int>(td.tree_edges.size()) != t - 1) return false;
  for (auto [a, b] : td.tree_edges)
    if (a < 0 || b < 0 || a >= t || b >= t || a == b) return false;
  auto adj = tree_adjacency(td);
  std::vector<char> seen(std::size_t(t), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[std::size_t(v)])
      if (!seen[std::size_t(w)]) {
        seen[std::size_t(w)] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == t;
}

}  // namespace

std::vector<int> Layering::layer_index(int n) const {
  std::vector<int> idx(std::size_t(n), -1);
  for (int i = 0; i < layer_count(); ++i)
    for (int v : layers[std::size_t(i)]) idx[std::size_t(v)] = i;
  return idx;
}

void Layering::canonicalize() {
  while (!layers.empty() && layers.back().empty()) layers.pop_back();
  for (auto& l : layers) std::sort(l.begin(), l.end());
}

std::optional<TdViolation> validate_td(const Graph& g, const TreeDecomposition& td) {
  if (!edges_form_tree(td))
    return TdViolation{TdViolation::Kind::NotATree, -1, {-1, -1},
                       "tree edges do not form a tree over the nodes"};
  const int n = g.n();
  std::vector<char> covered(std::size_t(n), 0);
  for (std::size_t t = 0; t < td.bags.size(); ++t) {
    for (int v : td.bags[t]) {
      if (v < 0 || v >= n)
        return TdViolation{TdViolation::Kind::VertexOutOfRange, v, {-1, -1},
                           "bag " + std::to_string(t) + " holds an out-of-range vertex"};
      covered[std::size_t(v)] = 1;
    }
  }
  for (int v = 0; v < n; ++v)
    if (!covered[std::size_t(v)])
      return TdViolation{TdViolation::Kind::VertexUncovered, v, {-1, -1},
                         "vertex " + std::to_string(v) + " appears in no bag"};

  std::vector<std::vector<int>> nodes_of(static_cast<std::size_t>(n));
  for (std::size_t t = 0; t < td.bags.size(); ++t)
    for (int v : td.bags[t]) nodes_of[std::size_t(v)].push_back(static_cast<int>(t));

  for (auto [u, v] : g.edges()) {
    bool ok = false;
    const auto& smaller = nodes_of[std::size_t(u)].size() <= nodes_of[std::size_t(v)].size()
                              ? nodes_of[std::size_t(u)]
                              : nodes_of[std::size_t(v)];
    const int other = nodes_of[std::size_t(u)].size() <= nodes_of[std::size_t(v)].size() ? v : u;
    for (int t : smaller) {
      const auto& bag = td.bags[std::size_t(t)];
      if (std::binary_search(bag.begin(), bag.end(), other)) {
        ok = true;
        break;
      }
    }
    if (!ok)
      return TdViolation{TdViolation::Kind::EdgeUncovered, -1, {u, v},
                         "edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") is inside no bag"};
  }

  auto adj = tree_adjacency(td);
  std::vector<char> in_set(td.bags.size(), 0), seen(td.bags.size(), 0);
  for (int v = 0; v < n; ++v) {
    const auto& nodes = nodes_of[std::size_t(v)];
    for (int t : nodes) in_set[std::size_t(t)] = 1;
    std::queue<int> q;
    q.push(nodes[0]);
    seen[std::size_t(nodes[0])] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
      const int t = q.front();
      q.pop();
      for (int s : adj[std::size_t(t)])
        if (in_set[std::size_t(s)] && !seen[std::size_t(s)]) {
          seen[std::size_t(s)] = 1;
          ++reached;
          q.push(s);
        }
    }
    const bool connected = reached == nodes.size();
    for (int t : nodes) {
      in_set[std::size_t(t)] = 0;
      seen[std::size_t(t)] = 0;
    }
    if (!connected)
      return TdViolation{TdViolation::Kind::NotConnected, v, {-1, -1},
                         "nodes holding vertex " + std::to_string(v) +
                             " induce a disconnected part of the tree"};
  }
  return std::nullopt;
}

std::optional<std::string> validate_layering(const Graph& g, const Layering& l) {
  const int n = g.n();
  std::vector<int> idx(std::size_t(n), -1);
  for (int i = 0; i < l.layer_count(); ++i)
    for (int v : l.layers[std::size_t(i)]) {
      if (v < 0 || v >= n) return "layer holds an out-of-range vertex";
      if (idx[std::size_t(v)] >= 0)
        return "vertex " + std::to_string(v) + " appears in two layers";
      idx[std::size_t(v)] = i;
    }
  for (int v = 0; v < n; ++v)
    if (idx[std::size_t(v)] < 0)
      return "vertex " + std::to_string(v) + " is in no layer";
  for (auto [u, v] : g.edges())
    if (std::abs(idx[std::size_t(u)] - idx[std::size_t(v)]) > 1)
      return "edge (" + std::to_string(u) + "," + std::to_string(v) +
             ") spans non-consecutive layers";
  return std::nullopt;
}

std::optional<std::string> validate_cover(const Graph& g, const GeneralCover& c) {
  if (c.elements.empty()) return "cover has no elements";
  const long long m = static_cast<long long>(c.elements.size());
  std::vector<long long> count(std::size_t(g.n()), 0);
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    const auto& el = c.elements[i];
    for (int v : el.vertices) {
      if (v < 0 || v >= g.n()) return "element holds an out-of-range vertex";
      ++count[std::size_t(v)];
    }
    Graph sub = induced_subgraph(g, el.vertices);
    // Element decompositions carry original ids; remap for validation.
    TreeDecomposition local = restrict_td_to_subset(el.td, el.vertices, g.n());
    std::vector<int> index(std::size_t(g.n()), -1);
    for (std::size_t j = 0; j < el.vertices.size(); ++j)
      index[std::size_t(el.vertices[j])] = static_cast<int>(j);
    for (auto& bag : local.bags)
      for (auto& v : bag) v = index[std::size_t(v)];
    if (auto bad = validate_td(sub, local))
      return "element " + std::to_string(i) + ": " + bad->message;
  }
  for (int v = 0; v < g.n(); ++v) {
    // count/m >= beta as exact cross-multiplication
    if (Weight(count[std::size_t(v)], m) < c.beta)
      return "vertex " + std::to_string(v) + " is covered by too few elements";
  }
  return std::nullopt;
}

namespace {

int max_alpha_over_bags(const Graph& g, const std::vector<std::vector<int>>& sets,
                        const AlphaGuard& guard) {
  int best = 0;
  std::set<std::vector<int>> seen;  // identical bags recur; compute once
  for (const auto& s : sets) {
    if (static_cast<int>(s.size()) <= best) continue;
    if (!seen.insert(s).second) continue;
    best = std::max(best, independence_number(g, s, guard));
  }
  return best;
}

}  // namespace

int td_independence_number(const Graph& g, const TreeDecomposition& td,
                           const AlphaGuard& guard) {
  if (auto bad = validate_td(g, td))
    throw std::invalid_argument("invalid decomposition: " + bad->message);
  return max_alpha_over_bags(g, td.bags, guard);
}

int layered_independence_number(const Graph& g, const TreeDecomposition& td,
                                const Layering& l, const AlphaGuard& guard) {
  if (auto bad = validate_td(g, td))
    throw std::invalid_argument("invalid decomposition: " + bad->message);
  if (auto bad = validate_layering(g, l))
    throw std::invalid_argument("invalid layering: " + *bad);
  auto idx = l.layer_index(g.n());
  std::vector<std::vector<int>> slices;
  for (const auto& bag : td.bags) {
    std::map<int, std::vector<int>> by_layer;
    for (int v : bag) by_layer[idx[std::size_t(v)]].push_back(v);
    for (auto& [_, part] : by_layer) slices.push_back(std::move(part));
  }
  return max_alpha_over_bags(g, slices, guard);
}

TreeDecomposition restrict_td_to_subset(const TreeDecomposition& td,
                                        const std::vector<int>& subset, int n) {
  std::vector<char> keep(std::size_t(n), 0);
  for (int v : subset) keep[std::size_t(v)] = 1;
  TreeDecomposition out;
  out.bags.reserve(td.bags.size());
  for (const auto& bag : td.bags) {
    std::vector<int> nb;
    for (int v : bag)
      if (keep[std::size_t(v)]) nb.push_back(v);
    out.bags.push_back(std::move(nb));
  }
  out.tree_edges = td.tree_edges;
  return out;
}

TreeDecomposition merge_under_hub(const std::vector<TreeDecomposition>& parts) {
  TreeDecomposition out;
  out.bags.push_back({});  // hub
  for (const auto& part : parts) {
    const int base = out.node_count();
    for (const auto& bag : part.bags) out.bags.push_back(bag);
    for (auto [a, b] : part.tree_edges) out.tree_edges.emplace_back(base + a, base + b);
    out.tree_edges.emplace_back(0, base);
  }
  return out;
}

TreeDecomposition sqrt_compress(const Graph& g, const TreeDecomposition& td,
                                const Layering& l, int k) {
  if (k < 1) throw std::invalid_argument("layered bound must be >= 1");
  if (auto bad = validate_td(g, td))
    throw std::invalid_argument("invalid decomposition: " + bad->message);
  if (auto bad = validate_layering(g, l))
    throw std::invalid_argument("invalid layering: " + *bad);
  const int n = g.n();
  if (n == 0) throw std::invalid_argument("empty graph");

  // Smallest p with p*p*k >= n, i.e. p = ceil(sqrt(n/k)).
  int p = std::max(1, static_cast<int>(std::ceil(std::sqrt(double(n) / double(k)))));
  while (p > 1 && static_cast<long long>(p - 1) * (p - 1) * k >= n) --p;
  while (static_cast<long long>(p) * p * k < n) ++p;

  auto idx = l.layer_index(n);
  // Residue classes of layers mod p; delete the lightest one.
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(p));
  for (int v = 0; v < n; ++v) {
    const int layer = idx[std::size_t(v)];
    classes[std::size_t(layer % p)].push_back(v);
  }
  int best_j = 0;
  for (int j = 1; j < p; ++j)
    if (classes[std::size_t(j)].size() < classes[std::size_t(best_j)].size()) best_j = j;
  std::vector<int>& deleted = classes[std::size_t(best_j)];
  std::sort(deleted.begin(), deleted.end());

  std::vector<int> rest;
  std::vector<char> gone(std::size_t(n), 0);
  for (int v : deleted) gone[std::size_t(v)] = 1;
  for (int v = 0; v < n; ++v)
    if (!gone[std::size_t(v)]) rest.push_back(v);

  std::vector<TreeDecomposition> parts;
  for (const auto& comp : connected_components_within(g, rest))
    parts.push_back(restrict_td_to_subset(td, comp, n));
  TreeDecomposition out = merge_under_hub(parts);
  for (auto& bag : out.bags) {
    std::vector<int> merged;
    std::set_union(bag.begin(), bag.end(), deleted.begin(), deleted.end(),
                   std::back_inserter(merged));
    bag = std::move(merged);
  }
  return out;
}

GeneralCover cover_from_layering(const Graph& g, const TreeDecomposition& td,
                                 const Layering& l, int r, long long ell) {
  if (r < 2) throw std::invalid_argument("cover order must be >= 2");
  if (auto bad = validate_td(g, td))
    throw std::invalid_argument("invalid decomposition: " + bad->message);
  if (auto bad = validate_layering(g, l))
    throw std::invalid_argument("invalid layering: " + *bad);
  const int n = g.n();
  auto idx = l.layer_index(n);

  GeneralCover cover;
  cover.beta = Weight(r - 1, r);
  cover.alpha_bound = ell * (r - 1);
  for (int m = 0; m < r; ++m) {
    CoverElement el;
    el.residue = m;
    for (int v = 0; v < n; ++v)
      if (idx[std::size_t(v)] % r != m) el.vertices.push_back(v);
    std::vector<TreeDecomposition> parts;
    for (const auto& comp : connected_components_within(g, el.vertices))
      parts.push_back(restrict_td_to_subset(td, comp, n));
    el.td = parts.empty() ? TreeDecomposition{{{}}, {}} : merge_under_hub(parts);
    cover.elements.push_back(std::move(el));
  }
  return cover;
}

std::pair<TreeDecomposition, Layering> lift_td_to_power(
    const Graph& g, const TreeDecomposition& td, const Layering& l, int d) {
  if (d < 0) throw std::invalid_argument("lift radius must be >= 0");
  if (auto bad = validate_td(g, td))
    throw std::invalid_argument("invalid decomposition: " + bad->message);
  if (auto bad = validate_layering(g, l))
    throw std::invalid_argument("invalid layering: " + *bad);

  TreeDecomposition lifted;
  lifted.tree_edges = td.tree_edges;
  lifted.bags.reserve(td.bags.size());
  for (const auto& bag : td.bags) {
    if (bag.empty()) {
      lifted.bags.push_back({});
      continue;
    }
    auto dist = bfs_distances(g, bag);
    std::vector<int> nb;
    for (int v = 0; v < g.n(); ++v)
      if (dist[std::size_t(v)] >= 0 && dist[std::size_t(v)] <= d) nb.push_back(v);
    lifted.bags.push_back(std::move(nb));
  }

  Layering coarse;
  const int step = 1 + 2 * d;
  const int groups = (l.layer_count() + step - 1) / step;
  coarse.layers.assign(std::size_t(std::max(groups, 1)), {});
  for (int i = 0; i < l.layer_count(); ++i)
    for (int v : l.layers[std::size_t(i)])
      coarse.layers[std::size_t(i / step)].push_back(v);
  coarse.canonicalize();
  return {std::move(lifted), std::move(coarse)};
}

TreeDecomposition lift_td_to_conflict(const Graph& g, const TreeDecomposition& td,
                                      const SubgraphFamily& fam) {
  // The decomposition may cover only part of the graph (a cover element's
  // restriction); it must be valid for the subgraph induced by its covered
  // set, and every family member must stay inside that set.
  std::vector<int> local(std::size_t(g.n()), -1);
  std::vector<int> covered;
  for (const auto& bag : td.bags)
    for (int v : bag) {
      if (v < 0 || v >= g.n())
        throw std::invalid_argument("invalid decomposition: bag vertex out of range");
      if (local[std::size_t(v)] < 0) {
        local[std::size_t(v)] = 0;
        covered.push_back(v);
      }
    }
  std::sort(covered.begin(), covered.end());
  for (std::size_t i = 0; i < covered.size(); ++i)
    local[std::size_t(covered[i])] = static_cast<int>(i);
  for (const auto& member : fam.members)
    for (int v : member)
      if (v < 0 || v >= g.n() || local[std::size_t(v)] < 0)
        throw std::invalid_argument("family member leaves the covered vertex set");
  TreeDecomposition relabeled;
  relabeled.tree_edges = td.tree_edges;
  relabeled.bags.reserve(td.bags.size());
  for (const auto& bag : td.bags) {
    std::vector<int> b;
    b.reserve(bag.size());
    for (int v : bag) b.push_back(local[std::size_t(v)]);
    std::sort(b.begin(), b.end());
    relabeled.bags.push_back(std::move(b));
  }
  if (auto bad = validate_td(induced_subgraph(g, covered), relabeled))
    throw std::invalid_argument("invalid decomposition: " + bad->message);
  std::vector<std::vector<int>> member_of(std::size_t(g.n()));
  for (std::size_t j = 0; j < fam.members.size(); ++j)
    for (int v : fam.members[j]) member_of[std::size_t(v)].push_back(static_cast<int>(j));
  TreeDecomposition lifted;
  lifted.tree_edges = td.tree_edges;
  for (const auto& bag : td.bags) {
    std::vector<int> nb;
    for (int v : bag)
      for (int j : member_of[std::size_t(v)]) nb.push_back(j);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    lifted.bags.push_back(std::move(nb));
  }
  return lifted;
}

namespace {

/// Greedy two-sided split of component sizes, both sides <= 2/3 of total.
std::pair<std::vector<int>, std::vector<int>> split_components(
    const std::vector<std::vector<int>>& comps) {
  std::vector<std::size_t> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (comps[a].size() != comps[b].size()) return comps[a].size() > comps[b].size();
    return a < b;
  });
  std::size_t total = 0;
  for (const auto& c : comps) total += c.size();
  std::vector<int> first, second;
  std::size_t wf = 0;
  for (std::size_t i : order) {
    // Fill the first side until it reaches a third of the total.
    if (3 * wf < total) {
      wf += comps[i].size();
      first.insert(first.end(), comps[i].begin(), comps[i].end());
    } else {
      second.insert(second.end(), comps[i].begin(), comps[i].end());
    }
  }
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  return {first, second};
}

}  // namespace

BalancedSeparation balanced_separation_from_td(const Graph& g,
                                               const TreeDecomposition& td,
                                               const AlphaGuard& guard) {
  if (auto bad = validate_td(g, td))
    throw std::invalid_argument("invalid decomposition: " + bad->message);
  const int n = g.n();
  // Some bag always splits every component down to n/2; take the best.
  int best_node = -1;
  std::size_t best_max = std::size_t(n) + 1;
  for (int t = 0; t < td.node_count(); ++t) {
    const auto& bag = td.bags[std::size_t(t)];
    std::vector<char> in_bag(std::size_t(n), 0);
    for (int v : bag) in_bag[std::size_t(v)] = 1;
    std::vector<int> outside;
    for (int v = 0; v < n; ++v)
      if (!in_bag[std::size_t(v)]) outside.push_back(v);
    std::size_t worst = 0;
    for (const auto& comp : connected_components_within(g, outside))
      worst = std::max(worst, comp.size());
    if (worst < best_max) {
      best_max = worst;
      best_node = t;
    }
  }

  const auto& bag = td.bags[std::size_t(best_node)];
  std::vector<char> in_bag(std::size_t(n), 0);
  for (int v : bag) in_bag[std::size_t(v)] = 1;
  std::vector<int> outside;
  for (int v = 0; v < n; ++v)
    if (!in_bag[std::size_t(v)]) outside.push_back(v);
  auto [first, second] = split_components(connected_components_within(g, outside));

  BalancedSeparation out;
  out.bag_node = best_node;
  std::set_union(first.begin(), first.end(), bag.begin(), bag.end(),
                 std::back_inserter(out.separation.a));
  std::set_union(second.begin(), second.end(), bag.begin(), bag.end(),
                 std::back_inserter(out.separation.b));
  out.separator_alpha = independence_number(g, bag, guard);
  return out;
}

BalancedSeparation separation_from_cover(const Graph& g, const GeneralCover& cover,
                                         int c, const AlphaGuard& guard) {
  if (c < 1) throw std::invalid_argument("fatness constant must be >= 1");
  if (cover.elements.empty()) throw std::invalid_argument("empty cover");
  if (cover.beta < Weight(2 * c - 1, 2 * c))
    throw std::invalid_argument("cover is not (1 - 1/(2c))-general");
  std::size_t best = 0;
  for (std::size_t i = 1; i < cover.elements.size(); ++i)
    if (cover.elements[i].vertices.size() > cover.elements[best].vertices.size())
      best = i;
  const auto& el = cover.elements[best];

  // Separate inside the induced subgraph of the largest element.
  std::vector<int> index(std::size_t(g.n()), -1);
  for (std::size_t j = 0; j < el.vertices.size(); ++j)
    index[std::size_t(el.vertices[j])] = static_cast<int>(j);
  Graph sub = induced_subgraph(g, el.vertices);
  TreeDecomposition local = restrict_td_to_subset(el.td, el.vertices, g.n());
  for (auto& bag : local.bags)
    for (auto& v : bag) v = index[std::size_t(v)];
  BalancedSeparation inner = balanced_separation_from_td(sub, local, guard);

  // Absorb the uncovered remainder into both sides.
  std::vector<char> in_el(std::size_t(g.n()), 0);
  for (int v : el.vertices) in_el[std::size_t(v)] = 1;
  std::vector<int> rest;
  for (int v = 0; v < g.n(); ++v)
    if (!in_el[std::size_t(v)]) rest.push_back(v);

  BalancedSeparation out;
  out.bag_node = inner.bag_node;
  auto lift_side = [&](const std::vector<int>& side) {
    std::vector<int> lifted;
    for (int v : side) lifted.push_back(el.vertices[std::size_t(v)]);
    std::vector<int> merged;
    std::set_union(lifted.begin(), lifted.end(), rest.begin(), rest.end(),
                   std::back_inserter(merged));
    return merged;
  };
  out.separation.a = lift_side(inner.separation.a);
  out.separation.b = lift_side(inner.separation.b);
  out.separator_alpha = independence_number(g, out.separation.separator(), guard);
  return out;
}

TreeDecomposition restrict_to_ball(const Graph& g, const TreeDecomposition& td,
                                   int v, int r) {
  if (v < 0 || v >= g.n()) throw std::invalid_argument("ball centre out of range");
  if (r < 0) throw std::invalid_argument("ball radius must be >= 0");
  if (auto bad = validate_td(g, td))
    throw std::invalid_argument("invalid decomposition: " + bad->message);
  return restrict_td_to_subset(td, closed_ball(g, v, r), g.n());
}

TreeDecomposition td_from_min_degree(const Graph& g) {
  const int n = g.n();
  if (n == 0) throw std::invalid_argument("empty graph");
  std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    adj[std::size_t(v)].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<char> done(std::size_t(n), 0);
  std::vector<int> order;
  std::vector<std::vector<int>> bags(static_cast<std::size_t>(n));
  std::vector<int> position(std::size_t(n), -1);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (done[std::size_t(v)]) continue;
      if (pick < 0 || adj[std::size_t(v)].size() < adj[std::size_t(pick)].size()) pick = v;
    }
    position[std::size_t(pick)] = step;
    order.push_back(pick);
    auto& bag = bags[std::size_t(step)];
    bag.push_back(pick);
    for (int w : adj[std::size_t(pick)]) bag.push_back(w);
    std::sort(bag.begin(), bag.end());
    // Fill: later neighbours become a clique.
    for (int a : adj[std::size_t(pick)])
      for (int b : adj[std::size_t(pick)])
        if (a != b) adj[std::size_t(a)].insert(b);
    for (int w : adj[std::size_t(pick)]) adj[std::size_t(w)].erase(pick);
    done[std::size_t(pick)] = 1;
  }
  TreeDecomposition td;
  td.bags = bags;
  for (int step = 0; step < n; ++step) {
    // Parent: the earliest-eliminated of the remaining bag members.
    int parent = -1;
    for (int v : bags[std::size_t(step)]) {
      if (position[std::size_t(v)] > step &&
          (parent < 0 || position[std::size_t(v)] < parent))
        parent = position[std::size_t(v)];
    }
    if (parent < 0 && step + 1 < n) parent = step + 1;
    if (parent >= 0) td.tree_edges.emplace_back(step, parent);
  }
  return td;
}

}  // namespace treealpha
