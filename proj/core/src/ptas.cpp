#include "treealpha/ptas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace treealpha {

namespace {

long long emod(long long a, long long m) { return ((a % m) + m) % m; }

/// Exact weighted independent set on the subgraph induced by `subset`,
/// using a decomposition phrased in original vertex ids.  Result ids are
/// original again.
DpSolution solve_mwis_subset(const Graph& g, const std::vector<Weight>& w,
                             const std::vector<int>& subset,
                             const TreeDecomposition& td, std::size_t max_states) {
  std::vector<int> local(std::size_t(g.n()), -1);
  for (std::size_t i = 0; i < subset.size(); ++i)
    local[std::size_t(subset[i])] = static_cast<int>(i);

  TreeDecomposition rtd;
  rtd.tree_edges = td.tree_edges;
  rtd.bags.reserve(td.bags.size());
  for (const auto& bag : td.bags) {
    std::vector<int> b;
    for (int v : bag)
      if (local[std::size_t(v)] >= 0) b.push_back(local[std::size_t(v)]);
    std::sort(b.begin(), b.end());
    rtd.bags.push_back(std::move(b));
  }

  WeightedGraph wg;
  wg.graph = induced_subgraph(g, subset);
  for (int v : subset) wg.weights.push_back(w[std::size_t(v)]);

  DpSolution sol = mwis_on_td(wg, rtd, max_states);
  for (int& v : sol.chosen) v = subset[std::size_t(v)];
  std::sort(sol.chosen.begin(), sol.chosen.end());
  return sol;
}

/// Exact packing among the members that lie entirely inside a cover
/// element, solved on the element decomposition lifted to the conflict
/// graph.  Chosen indices refer to the full family.
DpSolution solve_element_packing(const Graph& host, const SubgraphFamily& fam,
                                 const CoverElement& el, std::size_t max_states) {
  std::vector<char> inside(std::size_t(host.n()), 0);
  for (int v : el.vertices) inside[std::size_t(v)] = 1;

  SubgraphFamily sub;
  std::vector<int> orig;
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    bool all = true;
    for (int v : fam.members[i])
      if (!inside[std::size_t(v)]) {
        all = false;
        break;
      }
    if (all) {
      sub.members.push_back(fam.members[i]);
      sub.weights.push_back(fam.weights[i]);
      orig.push_back(static_cast<int>(i));
    }
  }
  if (sub.members.empty()) return DpSolution{};

  Graph conflict = conflict_graph(host, sub);
  TreeDecomposition ctd = lift_td_to_conflict(host, el.td, sub);
  DpSolution sol = mwis_on_td(WeightedGraph{conflict, sub.weights}, ctd, max_states);
  for (int& m : sol.chosen) m = orig[std::size_t(m)];
  std::sort(sol.chosen.begin(), sol.chosen.end());
  return sol;
}

PtasReport best_over_elements(const Graph& host, const SubgraphFamily& fam,
                              const GeneralCover& cover, std::size_t max_states) {
  if (cover.elements.empty()) throw std::invalid_argument("cover has no elements");
  PtasReport rep;
  rep.shift_count = static_cast<int>(cover.elements.size());
  rep.alpha_bound = cover.alpha_bound;
  bool have = false;
  for (std::size_t m = 0; m < cover.elements.size(); ++m) {
    DpSolution sol = solve_element_packing(host, fam, cover.elements[m], max_states);
    if (!have || sol.weight > rep.solution.weight) {
      have = true;
      rep.solution = std::move(sol);
      rep.chosen_shift = static_cast<int>(m);
    }
  }
  return rep;
}

}  // namespace

PtasReport ptas_packing_from_cover(const Graph& g, const SubgraphFamily& fam,
                                   const GeneralCover& cover, std::size_t max_states) {
  const int h = fam.max_member_size();
  const Weight ratio = Weight(1) - Weight(h) * (Weight(1) - cover.beta);
  if (ratio <= Weight(0))
    throw std::invalid_argument("cover too sparse for this member size");
  PtasReport rep = best_over_elements(g, fam, cover, max_states);
  rep.ratio = ratio;
  rep.method = "packing_from_cover";
  return rep;
}

PtasReport ptas_mwis_fat(const ObjectCollection& c, const std::vector<Weight>& weights,
                         long long r0, long long cfat, std::size_t max_states) {
  if (weights.size() != c.objects.size())
    throw std::invalid_argument("one weight per object required");
  const Graph g = intersection_graph(c, PathMode::Vertex);
  const GeneralCover cover = general_cover_fat(c, r0, cfat);

  PtasReport rep;
  rep.shift_count = static_cast<int>(cover.elements.size());
  rep.alpha_bound = cover.alpha_bound;
  rep.ratio = cover.beta;
  rep.method = "mwis_fat_cover";
  bool have = false;
  for (std::size_t m = 0; m < cover.elements.size(); ++m) {
    const CoverElement& el = cover.elements[m];
    DpSolution sol = solve_mwis_subset(g, weights, el.vertices, el.td, max_states);
    if (!have || sol.weight > rep.solution.weight) {
      have = true;
      rep.solution = std::move(sol);
      rep.chosen_shift = static_cast<int>(m);
    }
  }
  return rep;
}

PtasReport ptas_distance_d(const Graph& g, const TreeDecomposition& td,
                           const Layering& l, long long ell,
                           const SubgraphFamily& fam, int dist, int r,
                           std::size_t max_states) {
  if (dist < 2 || dist % 2 != 0)
    throw std::invalid_argument("packing distance must be even and >= 2");
  const int h = fam.max_member_size();
  if (r <= h)
    throw std::invalid_argument("need more cover classes than the member size");

  Graph host = g;
  TreeDecomposition htd = td;
  Layering hl = l;
  long long hell = ell;
  if (dist > 2) {
    const int t = (dist - 2) / 2;
    host = graph_power(g, dist - 1);
    auto lifted = lift_td_to_power(g, td, l, t);
    htd = std::move(lifted.first);
    hl = std::move(lifted.second);
    hell = ell * (1 + 4LL * t);
  }
  const GeneralCover cover =
      cover_from_layering(host, htd, hl, r, hell);

  PtasReport rep = best_over_elements(host, fam, cover, max_states);
  rep.ratio = Weight(r - h, r);
  rep.method = "distance_packing_cover";
  return rep;
}

PtasReport ptas_mwis_shifting_paths(const ObjectCollection& c,
                                    const std::vector<Weight>& weights, double eps,
                                    std::size_t max_states) {
  if (c.kind != CollectionKind::GridPathsV && c.kind != CollectionKind::GridPathsE)
    throw std::invalid_argument("expected a lattice-path collection");
  if (!c.params.horiz_bound) throw std::invalid_argument("missing horizontal budget");
  if (!(eps > 0) || eps > 1) throw std::invalid_argument("eps must be in (0, 1]");
  if (weights.size() != c.objects.size())
    throw std::invalid_argument("one weight per object required");
  if (auto bad = validate_collection(c)) throw std::invalid_argument(*bad);

  const PathMode mode =
      c.kind == CollectionKind::GridPathsV ? PathMode::Vertex : PathMode::Edge;
  const long long ell = *c.params.horiz_bound;
  const long long k = std::max<long long>(2, llroundl(std::ceil(1.0 / eps - 1e-12)));
  const long long period = k * ell;

  // Column boundaries crossed by each path's horizontal steps.
  std::vector<std::vector<long long>> crossings(c.objects.size());
  for (std::size_t i = 0; i < c.objects.size(); ++i)
    for (const auto& e : grid_path_edges(std::get<GridPath>(c.objects[i].shape)))
      if (e[1] == e[3]) crossings[i].push_back(emod(e[0], period));

  PtasReport rep;
  rep.shift_count = static_cast<int>(k);
  rep.ratio = Weight(k - 1, k);
  rep.method = "shifting_paths";
  rep.alpha_bound = mode == PathMode::Vertex ? period : 3 * period - 1;

  bool have = false;
  for (long long s = 0; s < k; ++s) {
    const long long cut = s * ell;
    std::vector<int> keep;
    for (std::size_t i = 0; i < c.objects.size(); ++i)
      if (std::find(crossings[i].begin(), crossings[i].end(), cut) == crossings[i].end())
        keep.push_back(static_cast<int>(i));

    ObjectCollection kept;
    kept.dimension = c.dimension;
    kept.kind = c.kind;
    kept.params = c.params;
    for (int i : keep) kept.objects.push_back(c.objects[std::size_t(i)]);

    DpSolution total;
    if (!kept.objects.empty()) {
      const Graph sg = intersection_graph(kept, mode);
      for (const auto& comp : connected_components(sg)) {
        ObjectCollection cc;
        cc.dimension = c.dimension;
        cc.kind = c.kind;
        cc.params = c.params;
        for (int v : comp) cc.objects.push_back(kept.objects[std::size_t(v)]);
        StripTd stpd = strip_td(cc, double(period));

        WeightedGraph wg;
        wg.graph = induced_subgraph(sg, comp);
        for (int v : comp) wg.weights.push_back(weights[std::size_t(keep[std::size_t(v)])]);
        DpSolution part = mwis_on_td(wg, stpd.td, max_states);
        total.weight += part.weight;
        total.peak_states = std::max(total.peak_states, part.peak_states);
        for (int v : part.chosen)
          total.chosen.push_back(keep[std::size_t(comp[std::size_t(v)])]);
      }
      std::sort(total.chosen.begin(), total.chosen.end());
    }
    if (!have || total.weight > rep.solution.weight) {
      have = true;
      rep.solution = std::move(total);
      rep.chosen_shift = static_cast<int>(s);
    }
  }
  return rep;
}

PtasReport ptas_mwis_shifting_geom(const ObjectCollection& c,
                                   const std::vector<Weight>& weights, double eps,
                                   std::size_t max_states) {
  long long mult = 0;
  double width = 0;
  if (c.kind == CollectionKind::UnitDisks && c.params.radius) {
    mult = 3;
    width = 2 * *c.params.radius;
  } else if (c.kind == CollectionKind::UnitWidthRects && c.params.width) {
    mult = 2;
    width = *c.params.width;
  } else {
    throw std::invalid_argument("expected shared-radius disks or shared-width boxes");
  }
  if (!(eps > 0) || eps > 1) throw std::invalid_argument("eps must be in (0, 1]");
  if (weights.size() != c.objects.size())
    throw std::invalid_argument("one weight per object required");

  const long long k =
      std::max<long long>(mult + 1, llroundl(std::ceil(double(mult) / eps - 1e-12)));

  // Anchor the slab grid at the leftmost projection.
  double x0 = 0;
  bool first = true;
  for (const auto& o : c.objects) {
    auto [lo, hi] = bounding_box(o);
    (void)hi;
    x0 = first ? lo[0] : std::min(x0, lo[0]);
    first = false;
  }
  ObjectCollection base = translate_collection(c, Point{-x0, 0.0});

  // Slab indices each object touches (2 for boxes, up to 3 for disks).
  std::vector<std::pair<long long, long long>> touched(base.objects.size());
  for (std::size_t i = 0; i < base.objects.size(); ++i) {
    auto [a, b] = horizontal_part(base.objects[std::size_t(i)]);
    if (mult == 3) {
      touched[i] = {static_cast<long long>(std::floor((a - kGeomEps) / width)),
                    static_cast<long long>(std::floor((b + kGeomEps) / width))};
    } else {
      touched[i] = {static_cast<long long>(std::floor(a / width)),
                    static_cast<long long>(std::floor(b / width))};
    }
  }

  PtasReport rep;
  rep.shift_count = static_cast<int>(k);
  rep.ratio = Weight(k - mult, k);
  rep.method = mult == 3 ? "shifting_disks" : "shifting_rects";
  rep.alpha_bound = mult == 3 ? 3 * (k - 1) : (k - 1);

  bool have = false;
  for (long long s = 0; s < k; ++s) {
    std::vector<int> keep;
    for (std::size_t i = 0; i < base.objects.size(); ++i) {
      bool hit = false;
      for (long long t = touched[i].first; t <= touched[i].second; ++t)
        if (emod(t, k) == s) {
          hit = true;
          break;
        }
      if (!hit) keep.push_back(static_cast<int>(i));
    }

    ObjectCollection kept;
    kept.dimension = c.dimension;
    kept.kind = c.kind;
    kept.params = c.params;
    for (int i : keep) kept.objects.push_back(base.objects[std::size_t(i)]);

    DpSolution total;
    if (!kept.objects.empty()) {
      const Graph sg = intersection_graph(kept, PathMode::Vertex);
      for (const auto& comp : connected_components(sg)) {
        ObjectCollection cc;
        cc.dimension = c.dimension;
        cc.kind = c.kind;
        cc.params = c.params;
        for (int v : comp) cc.objects.push_back(kept.objects[std::size_t(v)]);
        StripTd stpd = strip_td(cc, double(k - 1) * width);

        WeightedGraph wg;
        wg.graph = induced_subgraph(sg, comp);
        for (int v : comp) wg.weights.push_back(weights[std::size_t(keep[std::size_t(v)])]);
        DpSolution part = mwis_on_td(wg, stpd.td, max_states);
        total.weight += part.weight;
        total.peak_states = std::max(total.peak_states, part.peak_states);
        for (int v : part.chosen)
          total.chosen.push_back(keep[std::size_t(comp[std::size_t(v)])]);
      }
      std::sort(total.chosen.begin(), total.chosen.end());
    }
    if (!have || total.weight > rep.solution.weight) {
      have = true;
      rep.solution = std::move(total);
      rep.chosen_shift = static_cast<int>(s);
    }
  }
  return rep;
}

DpSolution subexp_exact(const Graph& g, const TreeDecomposition& td, const Layering& l,
                        int k, const std::vector<Weight>& weights, int dist,
                        std::size_t max_states) {
  if (dist < 2 || dist % 2 != 0)
    throw std::invalid_argument("distance must be even and >= 2");
  if (static_cast<int>(weights.size()) != g.n())
    throw std::invalid_argument("one weight per vertex required");

  Graph host = g;
  TreeDecomposition htd = td;
  Layering hl = l;
  int hk = k;
  if (dist > 2) {
    const int t = (dist - 2) / 2;
    host = graph_power(g, dist - 1);
    auto lifted = lift_td_to_power(g, td, l, t);
    htd = std::move(lifted.first);
    hl = std::move(lifted.second);
    hk = k * (1 + 4 * t);
  }
  TreeDecomposition compressed = sqrt_compress(host, htd, hl, hk);
  return mwis_on_td(WeightedGraph{host, weights}, compressed, max_states);
}

}  // namespace treealpha
