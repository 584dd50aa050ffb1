#include "treealpha/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <stdexcept>

namespace treealpha {

namespace {

struct SolCell {
  int vertex;
  std::shared_ptr<const SolCell> next;
};
using SolPtr = std::shared_ptr<const SolCell>;

std::vector<int> materialize(const SolPtr& sol) {
  std::vector<int> out;
  for (const SolCell* c = sol.get(); c; c = c->next.get()) out.push_back(c->vertex);
  std::sort(out.begin(), out.end());
  return out;
}

bool chain_less(const SolPtr& a, const SolPtr& b) {
  return materialize(a) < materialize(b);
}

struct Entry {
  Weight value = Weight(0);
  SolPtr sol;
};

using Table = std::map<std::vector<int>, Entry>;

void keep_better(Table& t, std::vector<int> key, Weight value, SolPtr sol) {
  auto [it, inserted] = t.emplace(std::move(key), Entry{value, sol});
  if (inserted) return;
  if (value > it->second.value ||
      (value == it->second.value && chain_less(sol, it->second.sol)))
    it->second = Entry{value, std::move(sol)};
}

}  // namespace

NiceTreeDecomposition to_nice(const TreeDecomposition& td) {
  const int nodes = td.node_count();
  if (nodes == 0) {
    NiceTreeDecomposition out;
    out.nodes.push_back(NiceNode{NiceNode::Kind::Leaf, {}, -1, -1, -1});
    out.root = 0;
    return out;
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
  for (auto [a, b] : td.tree_edges) {
    adj[std::size_t(a)].push_back(b);
    adj[std::size_t(b)].push_back(a);
  }

  NiceTreeDecomposition out;
  auto add = [&](NiceNode n) {
    out.nodes.push_back(std::move(n));
    return static_cast<int>(out.nodes.size()) - 1;
  };
  // Grows/shrinks the nice tree top `cur` (with bag `have`) into `want`.
  auto morph = [&](int cur, std::vector<int> have, const std::vector<int>& want) {
    std::vector<int> drop, take;
    std::set_difference(have.begin(), have.end(), want.begin(), want.end(),
                        std::back_inserter(drop));
    std::set_difference(want.begin(), want.end(), have.begin(), have.end(),
                        std::back_inserter(take));
    for (auto it = drop.rbegin(); it != drop.rend(); ++it) {
      std::vector<int> bag = have;
      bag.erase(std::find(bag.begin(), bag.end(), *it));
      cur = add(NiceNode{NiceNode::Kind::Forget, bag, cur, -1, *it});
      have = std::move(bag);
    }
    for (int v : take) {
      std::vector<int> bag = have;
      bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
      cur = add(NiceNode{NiceNode::Kind::Introduce, bag, cur, -1, v});
      have = std::move(bag);
    }
    return cur;
  };

  std::vector<int> seen(std::size_t(nodes), 0);
  // Returns the nice node whose bag equals the original node's bag.
  auto build = [&](auto&& self, int node, int parent) -> int {
    if (seen[std::size_t(node)])
      throw std::invalid_argument("decomposition tree contains a cycle");
    seen[std::size_t(node)] = 1;
    std::vector<int> bag = td.bags[std::size_t(node)];
    std::sort(bag.begin(), bag.end());

    std::vector<int> parts;
    for (int ch : adj[std::size_t(node)])
      if (ch != parent) parts.push_back(morph(self(self, ch, node),
                                              [&] {
                                                std::vector<int> b =
                                                    td.bags[std::size_t(ch)];
                                                std::sort(b.begin(), b.end());
                                                return b;
                                              }(),
                                              bag));
    if (parts.empty()) {
      int leaf = add(NiceNode{NiceNode::Kind::Leaf, {}, -1, -1, -1});
      return morph(leaf, {}, bag);
    }
    int cur = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
      cur = add(NiceNode{NiceNode::Kind::Join, bag, cur, parts[i], -1});
    return cur;
  };

  int top = build(build, 0, -1);
  for (int v : seen)
    if (!v) throw std::invalid_argument("decomposition tree is not connected");
  std::vector<int> rootbag = td.bags[0];
  std::sort(rootbag.begin(), rootbag.end());
  out.root = morph(top, rootbag, {});
  return out;
}

std::size_t default_max_states() {
  if (const char* env = std::getenv("TREEALPHA_MAX_STATES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2'000'000;
}

DpSolution mwis_on_td(const WeightedGraph& wg, const TreeDecomposition& td,
                      std::size_t max_states) {
  const Graph& g = wg.graph;
  if (static_cast<int>(wg.weights.size()) != g.n())
    throw std::invalid_argument("weight count does not match vertex count");
  for (const Weight& w : wg.weights)
    if (w < Weight(0)) throw std::invalid_argument("negative vertex weight");
  if (g.n() == 0) return DpSolution{};
  if (td.node_count() == 0)
    throw std::invalid_argument("empty decomposition for a non-empty graph");

  NiceTreeDecomposition nice = to_nice(td);
  std::vector<Table> tables(nice.nodes.size());
  DpSolution result;

  for (std::size_t i = 0; i < nice.nodes.size(); ++i) {
    const NiceNode& node = nice.nodes[i];
    Table& table = tables[i];
    switch (node.kind) {
      case NiceNode::Kind::Leaf:
        table.emplace(std::vector<int>{}, Entry{});
        break;
      case NiceNode::Kind::Introduce: {
        const int v = node.vertex;
        for (const auto& [set, entry] : tables[std::size_t(node.child1)]) {
          keep_better(table, set, entry.value, entry.sol);
          bool ok = true;
          for (int u : set)
            if (g.has_edge(u, v)) {
              ok = false;
              break;
            }
          if (!ok) continue;
          std::vector<int> with = set;
          with.insert(std::upper_bound(with.begin(), with.end(), v), v);
          keep_better(table, std::move(with), entry.value + wg.weights[std::size_t(v)],
                      entry.sol);
        }
        tables[std::size_t(node.child1)].clear();
        break;
      }
      case NiceNode::Kind::Forget: {
        const int v = node.vertex;
        for (auto& [set, entry] : tables[std::size_t(node.child1)]) {
          auto it = std::lower_bound(set.begin(), set.end(), v);
          if (it != set.end() && *it == v) {
            std::vector<int> without;
            without.reserve(set.size() - 1);
            for (int u : set)
              if (u != v) without.push_back(u);
            keep_better(table, std::move(without), entry.value,
                        std::make_shared<const SolCell>(SolCell{v, entry.sol}));
          } else {
            keep_better(table, set, entry.value, entry.sol);
          }
        }
        tables[std::size_t(node.child1)].clear();
        break;
      }
      case NiceNode::Kind::Join: {
        const Table& left = tables[std::size_t(node.child1)];
        const Table& right = tables[std::size_t(node.child2)];
        for (const auto& [set, le] : left) {
          auto it = right.find(set);
          if (it == right.end())
            throw std::logic_error("join children disagree on bag subsets");
          Weight shared(0);
          for (int u : set) shared += wg.weights[std::size_t(u)];
          SolPtr sol = le.sol;
          for (const SolCell* c = it->second.sol.get(); c; c = c->next.get())
            sol = std::make_shared<const SolCell>(SolCell{c->vertex, sol});
          keep_better(table, set, le.value + it->second.value - shared, std::move(sol));
        }
        tables[std::size_t(node.child1)].clear();
        tables[std::size_t(node.child2)].clear();
        break;
      }
    }
    result.peak_states = std::max(result.peak_states, table.size());
    if (table.size() > max_states) throw GuardExceeded("solver state table overflow");
  }

  const Table& roott = tables[std::size_t(nice.root)];
  if (roott.size() != 1)
    throw std::logic_error("root table must hold exactly the empty subset");
  const Entry& best = roott.begin()->second;
  result.weight = best.value;
  result.chosen = materialize(best.sol);

  // Safety net: the reported set must be independent and add up.
  Weight check(0);
  for (std::size_t a = 0; a < result.chosen.size(); ++a) {
    check += wg.weights[std::size_t(result.chosen[a])];
    for (std::size_t b = a + 1; b < result.chosen.size(); ++b)
      if (g.has_edge(result.chosen[a], result.chosen[b]))
        throw std::logic_error("solver produced a dependent set");
  }
  if (check != result.weight) throw std::logic_error("solver weight mismatch");
  return result;
}

namespace {

Layering single_layer(int n) {
  Layering l;
  l.layers.emplace_back();
  for (int v = 0; v < n; ++v) l.layers[0].push_back(v);
  return l;
}

}  // namespace

DpSolution max_weight_independent_packing(const Graph& g, const SubgraphFamily& fam,
                                          const TreeDecomposition& td,
                                          std::size_t max_states) {
  return distance_d_packing_exact(g, fam, 2, td, max_states);
}

DpSolution distance_d_packing_exact(const Graph& g, const SubgraphFamily& fam,
                                    int dist, const TreeDecomposition& td,
                                    std::size_t max_states) {
  if (dist < 2 || dist % 2 != 0)
    throw std::invalid_argument("packing distance must be even and >= 2");
  if (fam.members.empty()) return DpSolution{};

  Graph host = g;
  TreeDecomposition host_td = td;
  if (dist > 2) {
    host = graph_power(g, dist - 1);
    host_td = lift_td_to_power(g, td, single_layer(g.n()), (dist - 2) / 2).first;
  }
  Graph conflict = conflict_graph(host, fam);
  TreeDecomposition ctd = lift_td_to_conflict(host, host_td, fam);
  WeightedGraph cw{conflict, fam.weights};
  return mwis_on_td(cw, ctd, max_states);
}

}  // namespace treealpha
