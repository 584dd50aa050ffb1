#include "treealpha/fat_cover.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "treealpha/graph.hpp"

namespace treealpha {

namespace {

long long floordiv(long long a, long long b) {
  long long q = a / b, r = a % b;
  return r != 0 && (r < 0) != (b < 0) ? q - 1 : q;
}

constexpr double kCellEps = 1e-12;

}  // namespace

long long fragility_function(long long r0, int d) {
  if (r0 < 2) throw std::invalid_argument("coverage parameter must be >= 2");
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  const double keep = std::pow(1.0 - 1.0 / double(r0), 1.0 / d);
  return 2 * static_cast<long long>(std::ceil(1.0 / (1.0 - keep) - 1e-9));
}

GeneralCover general_cover_fat(const ObjectCollection& c, long long r0, long long cfat) {
  if (cfat < 1) throw std::invalid_argument("fatness constant must be >= 1");
  if (c.objects.empty()) throw std::invalid_argument("empty collection");
  const int n = static_cast<int>(c.objects.size());
  const int d = c.dimension;
  const long long f = fragility_function(r0, d);
  const long long F = f / 2;
  const double delta = 2.0 * double(f) / double(f - 1);

  auto [scaled, factor] = scale_collection(c);
  (void)factor;

  std::vector<int> rank(static_cast<std::size_t>(n));
  std::vector<Point> blo(static_cast<std::size_t>(n)), bhi(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    rank[std::size_t(v)] = rank_of(scaled.objects[std::size_t(v)], static_cast<int>(f));
    auto [lo, hi] = bounding_box(scaled.objects[std::size_t(v)]);
    blo[std::size_t(v)] = lo;
    bhi[std::size_t(v)] = hi;
  }

  // Shift vectors in lexicographic order; element m <-> digits of m base F.
  long long element_count = 1;
  for (int ax = 0; ax < d; ++ax) element_count *= F;

  GeneralCover cover;
  cover.beta = Weight(r0 - 1, r0);
  long long fa = 1;
  for (int ax = 0; ax < 2 * d; ++ax) fa *= f;
  cover.alpha_bound = cfat * fa;

  std::vector<long long> in_count(std::size_t(n), 0);

  for (long long m = 0; m < element_count; ++m) {
    std::vector<long long> shift(static_cast<std::size_t>(d));
    long long rem = m;
    for (int ax = d - 1; ax >= 0; --ax) {
      shift[std::size_t(ax)] = rem % F;
      rem /= F;
    }

    // Survivors: no plane of the object's own rank touches its bounding box.
    std::vector<int> survivors;
    std::vector<std::vector<long long>> cell_of(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      const double cell = std::pow(double(f), 1.0 - rank[std::size_t(v)]);
      bool alive = true;
      std::vector<long long> idx(static_cast<std::size_t>(d));
      for (int ax = 0; ax < d && alive; ++ax) {
        const double off = double(shift[std::size_t(ax)]) * delta;
        const double lo = blo[std::size_t(v)][std::size_t(ax)];
        const double hi = bhi[std::size_t(v)][std::size_t(ax)];
        const double t = (lo - off) / cell;
        if (std::abs(t) > 4e15) throw std::invalid_argument("coordinate spread too large");
        const double plane = off + std::ceil(t - kCellEps) * cell;
        if (plane <= hi + kCellEps * cell)
          alive = false;
        else
          idx[std::size_t(ax)] = static_cast<long long>(std::floor(t));
      }
      if (alive) {
        survivors.push_back(v);
        cell_of[std::size_t(v)] = std::move(idx);
        ++in_count[std::size_t(v)];
      }
    }

    // Materialized nodes: one per (rank, cell) holding a survivor, plus a
    // glue root with an empty bag at index 0.
    std::map<std::pair<int, std::vector<long long>>, int> node_id;
    for (int v : survivors) {
      auto key = std::make_pair(rank[std::size_t(v)], cell_of[std::size_t(v)]);
      node_id.emplace(key, 0);
    }
    int next = 1;
    for (auto& [key, id] : node_id) id = next++;

    CoverElement el;
    el.vertices = survivors;
    el.shift = shift;
    el.td.bags.resize(static_cast<std::size_t>(next));
    for (const auto& [key, id] : node_id) {
      const auto& [j, cell_idx] = key;
      const double cell = std::pow(double(f), 1.0 - j);
      Point qlo(static_cast<std::size_t>(d)), qhi(static_cast<std::size_t>(d));
      for (int ax = 0; ax < d; ++ax) {
        qlo[std::size_t(ax)] =
            double(shift[std::size_t(ax)]) * delta + double(cell_idx[std::size_t(ax)]) * cell;
        qhi[std::size_t(ax)] = qlo[std::size_t(ax)] + cell;
      }
      auto& bag = el.td.bags[std::size_t(id)];
      for (int v : survivors)
        if (rank[std::size_t(v)] <= j &&
            object_intersects_axis_box(scaled.objects[std::size_t(v)], qlo, qhi))
          bag.push_back(v);

      // Parent: nearest coarser materialized cell containing this one.
      int parent = 0;
      std::vector<long long> up = cell_idx;
      for (int jj = j - 1; jj >= 0; --jj) {
        for (auto& a : up) a = floordiv(a, f);
        auto it = node_id.find(std::make_pair(jj, up));
        if (it != node_id.end()) {
          parent = it->second;
          break;
        }
      }
      el.td.tree_edges.emplace_back(parent, id);
    }
    cover.elements.push_back(std::move(el));
  }

  for (int v = 0; v < n; ++v)
    if (Weight(in_count[std::size_t(v)], element_count) < cover.beta)
      throw std::logic_error("shifted-grid cover missed the coverage target");
  return cover;
}

ObjectCollection odd_power_fat_realization(const ObjectCollection& c, int k) {
  if (k < 0) throw std::invalid_argument("power parameter must be >= 0");
  if (!c.params.fatness)
    throw std::invalid_argument("collection lacks a declared fatness constant");
  const Graph g = intersection_graph(c, PathMode::Vertex);

  ObjectCollection out;
  out.dimension = c.dimension;
  out.kind = CollectionKind::Generic;
  long long blow = 1;
  for (int ax = 0; ax < c.dimension; ++ax) blow *= 3LL * (2 * k + 1);
  out.params.fatness = double(blow) * *c.params.fatness;

  for (int v = 0; v < g.n(); ++v) {
    UnionObject u;
    for (int w : closed_ball(g, v, k)) u.members.push_back(c.objects[std::size_t(w)]);
    out.objects.push_back(GeometricObject{std::move(u)});
  }
  return out;
}

}  // namespace treealpha
