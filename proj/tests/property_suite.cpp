// Randomized property suite: every module invariant gets a named property
// bound to a seeded generator grid. Usage:
//   property_suite [name-filter] [junit.xml] [failures.json]
// Exit 0 when everything passes, 1 otherwise.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <set>

#include "treealpha/fat_cover.hpp"
#include "treealpha/fatness.hpp"
#include "treealpha/io.hpp"
#include "treealpha/props.hpp"
#include "treealpha/ptas.hpp"
#include "treealpha/solver.hpp"
#include "helpers.hpp"

namespace {

void req(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

const char* kGeomKinds[] = {"unit_disks", "similarly_sized_disks", "unit_width_rects"};

ta::ObjectCollection random_kind_instance(ta::SplitMix64& rng, int size) {
  const char* kind = kGeomKinds[rng.next_below(3)];
  return make_instance(kind, std::max(1, size), rng.next());
}

ta::PathMode mode_of(const ta::ObjectCollection& c) {
  return c.kind == ta::CollectionKind::GridPathsE ? ta::PathMode::Edge
                                                  : ta::PathMode::Vertex;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string filter = argc > 1 ? argv[1] : "";
  const std::string xml_path = argc > 2 ? argv[2] : "property_results.xml";
  const std::string json_path = argc > 3 ? argv[3] : "property_failures.json";

  ta::PropertySuite suite;
  auto add = [&](const std::string& name, int max_size, ta::Property p) {
    if (!filter.empty() && name.find(filter) == std::string::npos) return;
    suite.add(name, max_size, std::move(p));
  };

  // ---- geometry ----
  add("geometry:intersects-symmetric-reflexive", 25, [](ta::SplitMix64& rng, int size) {
    auto c = random_kind_instance(rng, size);
    const auto mode = mode_of(c);
    for (std::size_t i = 0; i < c.objects.size(); ++i) {
      req(ta::intersects(c.objects[i], c.objects[i], mode), "not reflexive");
      for (std::size_t j = i + 1; j < c.objects.size(); ++j)
        req(ta::intersects(c.objects[i], c.objects[j], mode) ==
                ta::intersects(c.objects[j], c.objects[i], mode),
            "not symmetric");
    }
  });

  add("geometry:union-size-is-bbox-side", 12, [](ta::SplitMix64& rng, int size) {
    auto c = make_instance("fat_disks", std::max(2, size), rng.next());
    auto g = ta::intersection_graph(c);
    auto lifted = ta::odd_power_fat_realization(c, 1);
    for (std::size_t i = 0; i < lifted.objects.size(); ++i) {
      const double s = ta::object_size(lifted.objects[i]);
      auto [lo, hi] = ta::bounding_box(lifted.objects[i]);
      const double side = std::max(hi[0] - lo[0], hi[1] - lo[1]);
      req(std::abs(s - side) <= 1e-9, "union size != bbox side");
      const auto& u = std::get<ta::UnionObject>(lifted.objects[i].shape);
      for (const auto& m : u.members)
        req(ta::object_size(m) <= s + 1e-9, "member larger than union");
    }
  });

  add("geometry:rank-brackets-size", 40, [](ta::SplitMix64& rng, int size) {
    auto c = make_instance("fat_disks", std::max(1, size), rng.next());
    auto [scaled, factor] = ta::scale_collection(c);
    for (const auto& o : scaled.objects) {
      const double s = ta::object_size(o);
      const int r = 2 + static_cast<int>(rng.next_below(6));
      const int i = ta::rank_of(o, r);
      req(i >= 0, "negative rank");
      const double upper = std::pow(1.0 / r, i);
      const double lower = std::pow(1.0 / r, i + 1);
      req(s <= upper * (1 + 1e-9), "size above rank bracket");
      req(s > lower * (1 - 1e-9), "size below rank bracket");
    }
  });

  add("geometry:generator-deterministic", 60, [](ta::SplitMix64& rng, int size) {
    const std::uint64_t seed = rng.next();
    const char* kind = kGeomKinds[rng.next_below(3)];
    auto a = make_instance(kind, std::max(1, size), seed);
    auto b = make_instance(kind, std::max(1, size), seed);
    req(ta::instance_to_json(a) == ta::instance_to_json(b), "rerun differs");
  });

  add("geometry:fatness-estimate-monotone", 15, [](ta::SplitMix64& rng, int size) {
    auto c = make_instance("fat_disks", std::max(2, size), rng.next());
    auto more = c;
    auto extra = make_instance("fat_disks", 4, rng.next());
    for (const auto& o : extra.objects) more.objects.push_back(o);
    req(ta::estimate_fatness(more) >= ta::estimate_fatness(c),
        "estimate shrank when objects were added");
  });

  // ---- graph_core ----
  add("graph:power-monotone", 14, [](ta::SplitMix64& rng, int size) {
    auto g = random_graph(rng, std::max(2, size), 0.25);
    auto p2 = ta::graph_power(g, 2);
    auto p3 = ta::graph_power(g, 3);
    for (auto [u, v] : g.edges()) req(p2.has_edge(u, v), "p2 lost an edge");
    for (auto [u, v] : p2.edges()) req(p3.has_edge(u, v), "p3 lost an edge");
  });

  add("graph:conflict-of-singletons-is-host", 16, [](ta::SplitMix64& rng, int size) {
    auto g = random_graph(rng, std::max(1, size), 0.3);
    req(ta::conflict_graph(g, ta::singleton_family(g)) == g, "conflict != host");
  });

  add("graph:bruteforce-packing-distances", 9, [](ta::SplitMix64& rng, int size) {
    auto g = random_graph(rng, std::max(3, size), 0.35);
    auto fam = ta::connected_family(g, 2);
    if (fam.members.size() > 12) {
      fam.members.resize(12);
      fam.weights.resize(12);
    }
    const int d = 2 + 2 * static_cast<int>(rng.next_below(2));
    auto r = ta::bruteforce_packing(g, fam, d);
    for (std::size_t i = 0; i < r.chosen.size(); ++i)
      for (std::size_t j = i + 1; j < r.chosen.size(); ++j) {
        const int dist = ta::set_distance(g, fam.members[std::size_t(r.chosen[i])],
                                          fam.members[std::size_t(r.chosen[j])]);
        req(dist < 0 || dist >= d, "packing pair too close");
      }
  });

  add("graph:intersection-permutation-invariant", 18, [](ta::SplitMix64& rng, int size) {
    auto c = random_kind_instance(rng, size);
    const auto mode = mode_of(c);
    auto g = ta::intersection_graph(c, mode);
    std::vector<int> perm(c.objects.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = static_cast<int>(perm.size()) - 1; i > 0; --i)
      std::swap(perm[std::size_t(i)], perm[rng.next_below(std::uint64_t(i + 1))]);
    auto shuffled = c;
    for (std::size_t i = 0; i < perm.size(); ++i)
      shuffled.objects[std::size_t(perm[i])] = c.objects[i];
    auto h = ta::intersection_graph(shuffled, mode);
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v)
        req(g.has_edge(u, v) == h.has_edge(perm[std::size_t(u)], perm[std::size_t(v)]),
            "edge set moved under permutation");
  });

  // ---- decomposition ----
  add("decomposition:constructions-validate", 60, [](ta::SplitMix64& rng, int size) {
    auto c = random_kind_instance(rng, size);
    auto ld = ta::layered_td_auto(c);
    auto g = ta::intersection_graph(c, mode_of(c));
    auto bad = ta::validate_td(g, ld.td);
    req(!bad.has_value(), bad ? bad->message : "");
    auto lbad = ta::validate_layering(g, ld.layering);
    req(!lbad.has_value(), lbad.value_or(""));
  });

  add("decomposition:cover-membership-exact", 40, [](ta::SplitMix64& rng, int size) {
    auto c = make_instance("unit_disks", std::max(2, size), rng.next());
    auto g = ta::intersection_graph(c);
    auto ld = ta::layered_td_unit_disks(c);
    const int r = 3 + static_cast<int>(rng.next_below(3));
    auto cover = ta::cover_from_layering(g, ld.td, ld.layering, r, ld.declared_bound);
    std::vector<int> cnt(std::size_t(g.n()), 0);
    for (const auto& el : cover.elements)
      for (int v : el.vertices) ++cnt[std::size_t(v)];
    for (int v = 0; v < g.n(); ++v)
      req(cnt[std::size_t(v)] == r - 1, "membership count != r-1");
    auto lidx = ld.layering.layer_index(g.n());
    for (const auto& el : cover.elements)
      for (const auto& comp : ta::connected_components_within(g, el.vertices)) {
        int lo = 1 << 30, hi = -1;
        for (int v : comp) {
          lo = std::min(lo, lidx[std::size_t(v)]);
          hi = std::max(hi, lidx[std::size_t(v)]);
        }
        req(hi - lo + 1 <= r - 1, "component spans >= r layers");
      }
  });

  add("decomposition:sqrt-compress-alpha", 60, [](ta::SplitMix64& rng, int size) {
    const int n = std::max(4, size);
    auto c = make_instance("unit_disks", n, rng.next());
    auto g = ta::intersection_graph(c);
    auto ld = ta::layered_td_unit_disks(c);
    auto comp = ta::sqrt_compress(g, ld.td, ld.layering, 3);
    auto bad = ta::validate_td(g, comp);
    req(!bad.has_value(), bad ? bad->message : "");
    req(ta::td_independence_number(g, comp) <= 2.0 * std::sqrt(3.0 * n) + 1e-9,
        "compressed alpha exceeds 2 sqrt(kn)");
  });

  add("decomposition:lift-power-layering-valid", 30, [](ta::SplitMix64& rng, int size) {
    auto c = make_instance("unit_disks", std::max(2, size), rng.next());
    auto g = ta::intersection_graph(c);
    auto ld = ta::layered_td_unit_disks(c);
    const int d = 1 + static_cast<int>(rng.next_below(2));
    auto host = ta::graph_power(g, 1 + 2 * d);
    auto [ptd, pl] = ta::lift_td_to_power(g, ld.td, ld.layering, d);
    auto bad = ta::validate_td(host, ptd);
    req(!bad.has_value(), bad ? bad->message : "");
    auto lbad = ta::validate_layering(host, pl);
    req(!lbad.has_value(), lbad.value_or(""));
  });

  add("decomposition:balanced-separation-bounds", 18, [](ta::SplitMix64& rng, int size) {
    const int n = std::max(3, size);
    auto g = random_graph(rng, n, 0.2);
    auto td = random_valid_td(rng, g);
    auto bs = ta::balanced_separation_from_td(g, td);
    req(bs.bag_node >= 0 && bs.bag_node < td.node_count(), "bad bag node");
    req(bs.separation.separator() == td.bags[std::size_t(bs.bag_node)],
        "separator is not the bag verbatim");
    std::vector<char> ina(std::size_t(n), 0), inb(std::size_t(n), 0);
    for (int v : bs.separation.a) ina[std::size_t(v)] = 1;
    for (int v : bs.separation.b) inb[std::size_t(v)] = 1;
    int sa = 0, sb = 0;
    for (int v = 0; v < n; ++v) {
      req(ina[std::size_t(v)] || inb[std::size_t(v)], "vertex outside both sides");
      sa += ina[std::size_t(v)] && !inb[std::size_t(v)];
      sb += inb[std::size_t(v)] && !ina[std::size_t(v)];
    }
    const int limit = (2 * n + 2) / 3;
    req(sa <= limit && sb <= limit, "side exceeds ceil(2n/3)");
    for (auto [u, v] : g.edges()) {
      const bool ua = ina[std::size_t(u)] && !inb[std::size_t(u)];
      const bool vb = inb[std::size_t(v)] && !ina[std::size_t(v)];
      const bool va = ina[std::size_t(v)] && !inb[std::size_t(v)];
      const bool ub = inb[std::size_t(u)] && !ina[std::size_t(u)];
      req(!(ua && vb) && !(va && ub), "crossing edge");
    }
  });

  // ---- layered_constructions ----
  add("layered:bounds-exact", 120, [](ta::SplitMix64& rng, int size) {
    const char* kinds[] = {"unit_disks", "similarly_sized_disks", "unit_width_rects",
                           "grid_paths_v", "grid_paths_e"};
    const char* kind = kinds[rng.next_below(5)];
    auto c = make_instance(kind, std::max(1, size), rng.next());
    auto ld = ta::layered_td_auto(c);
    auto g = ta::intersection_graph(c, mode_of(c));
    req(ta::layered_independence_number(g, ld.td, ld.layering) <= ld.declared_bound,
        "layered independence exceeds declared bound");
  });

  add("layered:path-shape-4n-2", 80, [](ta::SplitMix64& rng, int size) {
    const int n = std::max(1, size);
    auto c = make_instance("unit_disks", n, rng.next());
    auto ld = ta::layered_td_unit_disks(c);
    req(ld.td.node_count() == 4 * n - 2, "node count != 4n-2");
    req(static_cast<int>(ld.td.tree_edges.size()) == ld.td.node_count() - 1, "not a path");
    for (int i = 0; i + 1 < ld.td.node_count(); ++i)
      req(ld.td.tree_edges[std::size_t(i)] == std::make_pair(i, i + 1), "edge not consecutive");
  });

  add("layered:edge-witness-in-shared-strip", 40, [](ta::SplitMix64& rng, int size) {
    auto c = make_instance("unit_disks", std::max(2, size), rng.next());
    auto ld = ta::layered_td_unit_disks(c);
    auto g = ta::intersection_graph(c);
    double minx = 1e300, miny = 1e300;
    for (const auto& o : c.objects) {
      auto [lo, hi] = ta::bounding_box(o);
      minx = std::min(minx, lo[0]);
      miny = std::min(miny, lo[1]);
    }
    auto norm = ta::translate_collection(c, {-minx, -miny});
    for (auto [u, v] : g.edges()) {
      auto [ulo, uhi] = ta::bounding_box(norm.objects[std::size_t(u)]);
      auto [vlo, vhi] = ta::bounding_box(norm.objects[std::size_t(v)]);
      const double ylo = std::max(ulo[1], vlo[1]);
      const double yhi = std::min(uhi[1], vhi[1]);
      bool witness = false;
      for (int i = 1; i <= ld.strips.strip_count() && !witness; ++i) {
        const auto& bag = ld.td.bags[std::size_t(i - 1)];
        if (!std::binary_search(bag.begin(), bag.end(), u) ||
            !std::binary_search(bag.begin(), bag.end(), v))
          continue;
        auto [a, b] = ld.strips.strip_range(i);
        witness = a <= yhi + 1e-9 && ylo <= b + 1e-9;
      }
      req(witness, "no shared strip meets the common y-range");
    }
  });

  // ---- fat_cover ----
  add("fat:refinement-nested-cells", 60, [](ta::SplitMix64& rng, int) {
    const long long f = ta::fragility_function(2 + rng.next_below(3));
    const double delta = 2.0 * double(f) / double(f - 1);
    const int rank = 1 + static_cast<int>(rng.next_below(4));
    const double fine = std::pow(double(f), 1 - (rank + 1));
    const double coarse = std::pow(double(f), 1 - rank);
    const double off = double(rng.next_below(std::uint64_t(f / 2))) * delta;
    const double x = rng.next_range(-2.0, 2.0);
    const double fs = std::floor((x - off) / fine) * fine + off;
    const double cs = std::floor((fs + 0.5 * fine - off) / coarse) * coarse + off;
    req(cs <= fs + 1e-9 && fs + fine <= cs + coarse + 1e-9,
        "fine cell leaks out of its coarse cell");
  });

  add("fat:survival-two-ways", 22, [](ta::SplitMix64& rng, int size) {
    auto c = make_instance("fat_disks", std::max(2, size), rng.next());
    const long long r0 = 2 + rng.next_below(2);
    const long long f = ta::fragility_function(r0);
    auto cover = ta::general_cover_fat(c, r0, 16);
    auto [scaled, factor] = ta::scale_collection(c);
    const double delta = 2.0 * double(f) / double(f - 1);
    for (const auto& el : cover.elements) {
      std::vector<char> in(scaled.objects.size(), 0);
      for (int v : el.vertices) in[std::size_t(v)] = 1;
      for (std::size_t i = 0; i < scaled.objects.size(); ++i) {
        const int rank = ta::rank_of(scaled.objects[i], static_cast<int>(f));
        const double cell = std::pow(double(f), 1 - rank);
        auto [lo, hi] = ta::bounding_box(scaled.objects[i]);
        bool killed = false;
        for (int axis = 0; axis < 2; ++axis) {
          const double off = double(el.shift[std::size_t(axis)]) * delta;
          const double t = std::ceil((lo[std::size_t(axis)] - off) / cell - 1e-12);
          if (t * cell + off <= hi[std::size_t(axis)] + 1e-12 * cell) killed = true;
        }
        req(in[i] == (killed ? 0 : 1), "survival test disagrees with membership");
      }
    }
  });

  add("fat:coverage-and-valid-elements", 20, [](ta::SplitMix64& rng, int size) {
    auto c = make_instance("fat_disks", std::max(2, size), rng.next());
    auto g = ta::intersection_graph(c);
    const long long r0 = 2 + rng.next_below(2);
    auto cover = ta::general_cover_fat(c, r0, 16);
    auto bad = ta::validate_cover(g, cover);
    req(!bad.has_value(), bad.value_or(""));
    std::vector<long long> hits(std::size_t(g.n()), 0);
    for (const auto& el : cover.elements)
      for (int v : el.vertices) ++hits[std::size_t(v)];
    for (int v = 0; v < g.n(); ++v)
      req(ta::Weight(hits[std::size_t(v)], (long long)cover.elements.size()) >= cover.beta,
          "vertex covered by fewer than beta of the elements");
  });

  add("fat:odd-power-realization", 12, [](ta::SplitMix64& rng, int size) {
    auto c = make_instance("fat_disks", std::max(2, size), rng.next());
    auto g = ta::intersection_graph(c);
    const int k = 1 + static_cast<int>(rng.next_below(2));
    auto lifted = ta::odd_power_fat_realization(c, k);
    req(ta::intersection_graph(lifted) == ta::graph_power(g, 2 * k + 1),
        "realization is not the odd power");
  });

  // ---- packing_solver ----
  add("solver:dp-equals-bruteforce", 20, [](ta::SplitMix64& rng, int size) {
    const int n = std::max(2, size);
    auto g = random_graph(rng, n, 0.15 + 0.25 * rng.next_double());
    auto td = random_valid_td(rng, g);
    ta::WeightedGraph wg{g, random_weights(rng, n)};
    auto dp = ta::mwis_on_td(wg, td);
    auto bf = ta::bruteforce_mwis(wg);
    req(dp.weight == bf.weight, "dp weight != brute force");
    req(dp.chosen == bf.chosen, "dp tie-break != brute force");
  });

  add("solver:dp-state-bound", 14, [](ta::SplitMix64& rng, int size) {
    const int n = std::max(2, size);
    auto g = random_graph(rng, n, 0.3);
    auto td = random_valid_td(rng, g);
    ta::WeightedGraph wg{g, random_weights(rng, n)};
    auto dp = ta::mwis_on_td(wg, td);
    auto nice = ta::to_nice(td);
    std::size_t cap = 0;
    for (const auto& node : nice.nodes) {
      const int b = static_cast<int>(node.bag.size());
      const int a = ta::independence_number(g, node.bag);
      long long sum = 0, binom = 1;
      for (int i = 0; i <= a; ++i) {
        sum += binom;
        binom = binom * (b - i) / (i + 1);
      }
      cap = std::max(cap, static_cast<std::size_t>(sum));
    }
    req(dp.peak_states <= cap, "table larger than the independent-subset count");
  });

  add("solver:packing-feasible-and-optimal", 10, [](ta::SplitMix64& rng, int size) {
    const int n = std::max(4, size);
    auto g = random_graph(rng, n, 0.3);
    auto td = random_valid_td(rng, g);
    auto fam = ta::connected_family(g, 2);
    if (fam.members.size() > 12) {
      fam.members.resize(12);
      fam.weights.resize(12);
    }
    for (auto& w : fam.weights) w = ta::Weight(rng.next_int(1, 9));
    auto dp = ta::max_weight_independent_packing(g, fam, td);
    auto bf = ta::bruteforce_packing(g, fam, 2);
    req(dp.weight == bf.weight, "packing dp != brute force");
    for (std::size_t i = 0; i < dp.chosen.size(); ++i)
      for (std::size_t j = i + 1; j < dp.chosen.size(); ++j) {
        const int dist = ta::set_distance(g, fam.members[std::size_t(dp.chosen[i])],
                                          fam.members[std::size_t(dp.chosen[j])]);
        req(dist < 0 || dist >= 2, "returned packing infeasible");
      }
  });

  add("solver:join-disjoint-blocks-add-up", 12, [](ta::SplitMix64& rng, int size) {
    const int half = std::max(2, size / 2);
    auto a = random_graph(rng, half, 0.4);
    auto b = random_graph(rng, half, 0.4);
    ta::Graph g(2 * half);
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(half + u, half + v);
    auto tda = random_valid_td(rng, a);
    auto tdb = random_valid_td(rng, b);
    for (auto& bag : tdb.bags)
      for (auto& v : bag) v += half;
    auto td = ta::merge_under_hub({tda, tdb});
    ta::WeightedGraph wg{g, random_weights(rng, 2 * half)};
    auto dp = ta::mwis_on_td(wg, td);
    ta::WeightedGraph wa{a, {wg.weights.begin(), wg.weights.begin() + half}};
    ta::WeightedGraph wb{b, {wg.weights.begin() + half, wg.weights.end()}};
    req(dp.weight == ta::bruteforce_mwis(wa).weight + ta::bruteforce_mwis(wb).weight,
        "block optima do not add up");
  });

  // ---- ptas ----
  add("ptas:ratio-guarantee", 14, [](ta::SplitMix64& rng, int size) {
    const int n = std::max(4, size);
    const int pick = static_cast<int>(rng.next_below(4));
    if (pick == 0) {
      auto c = make_instance("fat_disks", n, rng.next());
      auto g = ta::intersection_graph(c);
      auto w = random_weights(rng, g.n());
      auto rep = ta::ptas_mwis_fat(c, w, 2, 16);
      req(rep.solution.weight >= rep.ratio * ta::bruteforce_mwis({g, w}).weight,
          "fat-cover ratio violated");
    } else if (pick == 1) {
      auto c = make_instance("grid_paths_v", n, rng.next());
      auto g = ta::intersection_graph(c, ta::PathMode::Vertex);
      auto w = random_weights(rng, g.n());
      auto rep = ta::ptas_mwis_shifting_paths(c, w, 0.5);
      req(rep.solution.weight >= rep.ratio * ta::bruteforce_mwis({g, w}).weight,
          "path shifting ratio violated");
    } else if (pick == 2) {
      auto c = make_instance("unit_disks", n, rng.next());
      auto g = ta::intersection_graph(c);
      auto w = random_weights(rng, g.n());
      auto rep = ta::ptas_mwis_shifting_geom(c, w, 0.5);
      req(rep.solution.weight >= rep.ratio * ta::bruteforce_mwis({g, w}).weight,
          "disk shifting ratio violated");
    } else {
      auto c = make_instance("unit_disks", n, rng.next());
      auto g = ta::intersection_graph(c);
      auto ld = ta::layered_td_unit_disks(c);
      auto cover = ta::cover_from_layering(g, ld.td, ld.layering, 3, ld.declared_bound);
      auto fam = ta::singleton_family(g);
      auto rep = ta::ptas_packing_from_cover(g, fam, cover);
      req(rep.solution.weight >= rep.ratio * ta::bruteforce_mwis({g, fam.weights}).weight,
          "cover packing ratio violated");
    }
  });

  add("ptas:solutions-feasible-in-original", 16, [](ta::SplitMix64& rng, int size) {
    auto c = make_instance("unit_disks", std::max(2, size), rng.next());
    auto g = ta::intersection_graph(c);
    auto w = random_weights(rng, g.n());
    auto rep = ta::ptas_mwis_shifting_geom(c, w, 0.4);
    for (std::size_t i = 0; i < rep.solution.chosen.size(); ++i)
      for (std::size_t j = i + 1; j < rep.solution.chosen.size(); ++j)
        req(!g.has_edge(rep.solution.chosen[i], rep.solution.chosen[j]),
            "chosen set not independent in the original graph");
  });

  add("ptas:cover-monotone-under-extra-element", 10, [](ta::SplitMix64& rng, int size) {
    auto c = make_instance("unit_disks", std::max(3, size), rng.next());
    auto g = ta::intersection_graph(c);
    auto ld = ta::layered_td_unit_disks(c);
    auto cover = ta::cover_from_layering(g, ld.td, ld.layering, 3, ld.declared_bound);
    auto fam = ta::singleton_family(g);
    for (auto& w : fam.weights) w = ta::Weight(rng.next_int(1, 9));
    auto base = ta::ptas_packing_from_cover(g, fam, cover);
    ta::CoverElement whole;
    whole.vertices.resize(std::size_t(g.n()));
    std::iota(whole.vertices.begin(), whole.vertices.end(), 0);
    whole.td = ld.td;
    cover.elements.push_back(whole);
    auto wider = ta::ptas_packing_from_cover(g, fam, cover);
    req(wider.solution.weight >= base.solution.weight,
        "adding an element decreased the packing weight");
  });

  add("ptas:shifting-deletion-multiplicity", 40, [](ta::SplitMix64& rng, int size) {
    auto c = make_instance("unit_disks", std::max(1, size), rng.next());
    double minx = 1e300;
    for (const auto& o : c.objects)
      minx = std::min(minx, ta::bounding_box(o).first[0]);
    const double w = 2.0;  // slab width = diameter
    const int k = 6;
    for (const auto& o : c.objects) {
      auto [lo, hi] = ta::bounding_box(o);
      const long long first = (long long)std::floor((lo[0] - minx - 1e-9) / w);
      const long long last = (long long)std::floor((hi[0] - minx + 1e-9) / w);
      std::set<long long> residues;
      for (long long t = first; t <= last; ++t) residues.insert(((t % k) + k) % k);
      req(residues.size() <= 3, "disk deleted under more than three shifts");
    }
  });

  auto results = suite.run();
  for (const auto& r : results)
    std::cout << (r.passed ? "pass" : "FAIL") << "  " << r.name
              << (r.passed ? "" : "  [" + r.failure + "]") << "\n";

  ta::write_text_file(xml_path, ta::PropertySuite::junit_xml(results, "treealpha-properties"));
  ta::write_text_file(json_path, ta::PropertySuite::failures_json(results));
  const bool ok = ta::PropertySuite::all_passed(results);
  std::cout << (ok ? "all properties passed" : "PROPERTY FAILURES PRESENT") << "\n";
  return ok ? 0 : 1;
}
