#include <doctest.h>

#include <cmath>

#include "treealpha/decomposition.hpp"
#include "treealpha/layered.hpp"
#include "helpers.hpp"

TEST_SUITE_BEGIN("layered");

namespace {

ta::ObjectCollection two_far_disks() {
  // unit disks at (0,0) and (3,4): y-extents [-1,1] and [3,5]
  ta::ObjectCollection c;
  c.kind = ta::CollectionKind::UnitDisks;
  c.params.radius = 1.0;
  c.objects = {ta::GeometricObject{ta::Disk{{0.0, 0.0}, 1.0}},
               ta::GeometricObject{ta::Disk{{3.0, 4.0}, 1.0}}};
  return c;
}

}  // namespace

TEST_CASE("strip structure of two separated disks, fully pinned") {
  auto ld = ta::layered_td_unit_disks(two_far_disks());
  // construction translates into the positive quadrant: y-extents [0,2], [4,6]
  REQUIRE(ld.strips.breakpoints.size() == 4);
  CHECK(ld.strips.breakpoints[0] == doctest::Approx(0.0));
  CHECK(ld.strips.breakpoints[1] == doctest::Approx(2.0));
  CHECK(ld.strips.breakpoints[2] == doctest::Approx(4.0));
  CHECK(ld.strips.breakpoints[3] == doctest::Approx(6.0));
  REQUIRE(ld.strips.strip_count() == 6);
  const std::pair<double, double> want[6] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};
  for (int i = 1; i <= 6; ++i) {
    auto [a, b] = ld.strips.strip_range(i);
    CHECK(a == doctest::Approx(want[i - 1].first));
    CHECK(b == doctest::Approx(want[i - 1].second));
  }
  REQUIRE(ld.td.node_count() == 6);
  CHECK(ld.td.bags[0] == std::vector<int>{0});
  CHECK(ld.td.bags[1] == std::vector<int>{0});
  CHECK(ld.td.bags[2] == std::vector<int>{0});  // closed contact at y = 2
  CHECK(ld.td.bags[3] == std::vector<int>{1});
  CHECK(ld.td.bags[4] == std::vector<int>{1});
  CHECK(ld.td.bags[5] == std::vector<int>{1});
  // strips width 2r = 2; leftmost x coordinates 0 and 3 -> layers 0 and 1
  CHECK(ld.strips.vertical_width == doctest::Approx(2.0));
  REQUIRE(ld.layering.layer_count() == 2);
  CHECK(ld.layering.layers[0] == std::vector<int>{0});
  CHECK(ld.layering.layers[1] == std::vector<int>{1});
  CHECK(ld.declared_bound == 3);
}

TEST_CASE("decomposition tree is a path with 4n-2 nodes") {
  for (const char* kind : {"unit_disks", "unit_width_rects", "similarly_sized_disks"}) {
    auto c = make_instance(kind, 30, 17);
    auto ld = ta::layered_td_auto(c);
    const int nodes = ld.td.node_count();
    CHECK(nodes == 4 * 30 - 2);
    REQUIRE(static_cast<int>(ld.td.tree_edges.size()) == nodes - 1);
    for (int i = 0; i + 1 < nodes; ++i) {
      CHECK(ld.td.tree_edges[static_cast<std::size_t>(i)].first == i);
      CHECK(ld.td.tree_edges[static_cast<std::size_t>(i)].second == i + 1);
    }
  }
}

TEST_CASE("every construction validates and respects its declared bound") {
  struct Row {
    const char* kind;
    long long bound;
  };
  // fat-similar: ratio 2 and declared fatness 16 -> ceil(2*sqrt(2)*2) * 16 = 6 * 16
  const Row rows[] = {{"unit_disks", 3},
                      {"unit_width_rects", 1},
                      {"similarly_sized_disks", 6 * 16},
                      {"grid_paths_v", 2 * 2},
                      {"grid_paths_e", 6 * 2 - 1}};
  for (const auto& row : rows) {
    for (std::uint64_t seed : {5u, 6u, 7u}) {
      auto c = make_instance(row.kind, 60, seed);
      auto ld = ta::layered_td_auto(c);
      CHECK(ld.declared_bound == row.bound);
      const ta::PathMode mode = c.kind == ta::CollectionKind::GridPathsE
                                    ? ta::PathMode::Edge
                                    : ta::PathMode::Vertex;
      auto g = ta::intersection_graph(c, mode);
      CHECK_FALSE(ta::validate_td(g, ld.td).has_value());
      CHECK_FALSE(ta::validate_layering(g, ld.layering).has_value());
      CHECK(ta::layered_independence_number(g, ld.td, ld.layering) <= ld.declared_bound);
    }
  }
}

TEST_CASE("edge witnesses: some shared bag's strip meets the objects' common y-range") {
  for (const char* kind : {"unit_disks", "unit_width_rects"}) {
    auto c = make_instance(kind, 50, 23);
    auto ld = ta::layered_td_auto(c);
    auto g = ta::intersection_graph(c);
    // recover the normalized objects by re-running the translation the
    // construction applied: strip 1 starts at the smallest normalized y
    // endpoint, so align our copy the same way.
    double miny = 1e300, minx = 1e300;
    for (const auto& o : c.objects) {
      auto [lo, hi] = ta::bounding_box(o);
      minx = std::min(minx, lo[0]);
      miny = std::min(miny, lo[1]);
    }
    auto norm = ta::translate_collection(c, {-minx, -miny});
    for (auto [u, v] : g.edges()) {
      auto [ulo, uhi] = ta::bounding_box(norm.objects[static_cast<std::size_t>(u)]);
      auto [vlo, vhi] = ta::bounding_box(norm.objects[static_cast<std::size_t>(v)]);
      const double ylo = std::max(ulo[1], vlo[1]);
      const double yhi = std::min(uhi[1], vhi[1]);
      REQUIRE(ylo <= yhi + 1e-9);  // intersecting objects overlap in y
      bool witnessed = false;
      for (int i = 1; i <= ld.strips.strip_count() && !witnessed; ++i) {
        const auto& bag = ld.td.bags[static_cast<std::size_t>(i - 1)];
        if (!std::binary_search(bag.begin(), bag.end(), u)) continue;
        if (!std::binary_search(bag.begin(), bag.end(), v)) continue;
        auto [a, b] = ld.strips.strip_range(i);
        if (a <= yhi + 1e-9 && ylo <= b + 1e-9) witnessed = true;
      }
      CHECK(witnessed);
    }
  }
}

TEST_CASE("grid path constructions bound both adjacency modes") {
  for (std::uint64_t seed : {41u, 42u, 43u}) {
    auto cv = make_instance("grid_paths_v", 80, seed);
    auto ldv = ta::layered_td_grid_paths(cv, 2, ta::PathMode::Vertex);
    auto gv = ta::intersection_graph(cv, ta::PathMode::Vertex);
    CHECK_FALSE(ta::validate_td(gv, ldv.td).has_value());
    CHECK(ta::layered_independence_number(gv, ldv.td, ldv.layering) <= 4);

    auto ce = make_instance("grid_paths_e", 80, seed);
    auto lde = ta::layered_td_grid_paths(ce, 2, ta::PathMode::Edge);
    auto ge = ta::intersection_graph(ce, ta::PathMode::Edge);
    CHECK_FALSE(ta::validate_td(ge, lde.td).has_value());
    CHECK(ta::layered_independence_number(ge, lde.td, lde.layering) <= 11);
  }
}

TEST_CASE("layered_td_auto rejects generic collections") {
  ta::ObjectCollection c;
  c.kind = ta::CollectionKind::Generic;
  c.objects = {ta::GeometricObject{ta::Disk{{0.0, 0.0}, 1.0}}};
  CHECK_THROWS_AS(ta::layered_td_auto(c), std::invalid_argument);
}

TEST_CASE("windowed strip decomposition: valid, bounded, rejects wide inputs") {
  // disk centers in a 6-wide window, radius 1: total span 8, bound 3 * ceil(8 / 2)
  auto c = make_instance("unit_disks", 40, 19, 6.0);
  auto st = ta::strip_td(c, 8.0);
  CHECK(st.declared_bound == 12);
  auto g = ta::intersection_graph(c);
  CHECK_FALSE(ta::validate_td(g, st.td).has_value());
  CHECK(ta::td_independence_number(g, st.td) <= st.declared_bound);
  CHECK_THROWS_AS(ta::strip_td(c, 2.0), std::invalid_argument);  // window too narrow

  auto r = make_instance("unit_width_rects", 40, 20, 8.0);
  auto str = ta::strip_td(r, 9.0);
  CHECK(str.declared_bound == 9);  // ceil(9 / width 1)
  auto gr = ta::intersection_graph(r);
  CHECK_FALSE(ta::validate_td(gr, str.td).has_value());
  CHECK(ta::td_independence_number(gr, str.td) <= str.declared_bound);
}

TEST_CASE("windowed strips for grid paths use the column count") {
  // hand-built paths inside columns 0..5 (six columns)
  ta::ObjectCollection c;
  c.kind = ta::CollectionKind::GridPathsV;
  c.params.horiz_bound = 2;
  auto add = [&c](std::vector<std::array<long long, 2>> pts) {
    c.objects.push_back(ta::GeometricObject{ta::GridPath{std::move(pts)}});
  };
  add({{0, 0}, {2, 0}});
  add({{2, 0}, {2, 3}});
  add({{3, 1}, {5, 1}, {5, 4}});
  add({{0, 2}, {1, 2}});
  add({{4, 0}, {5, 0}});
  add({{1, 4}, {3, 4}});
  auto st = ta::strip_td(c, 6.0);
  CHECK(st.declared_bound == 6);
  auto g = ta::intersection_graph(c, ta::PathMode::Vertex);
  CHECK_FALSE(ta::validate_td(g, st.td).has_value());
  CHECK(ta::td_independence_number(g, st.td) <= 6);

  auto ce = c;
  ce.kind = ta::CollectionKind::GridPathsE;
  auto ste = ta::strip_td(ce, 6.0);
  CHECK(ste.declared_bound == 17);  // 3 * 6 - 1
  auto ge = ta::intersection_graph(ce, ta::PathMode::Edge);
  CHECK_FALSE(ta::validate_td(ge, ste.td).has_value());
}

TEST_CASE("fat-similar bound formula freezes the strip width factor") {
  auto c = make_instance("similarly_sized_disks", 35, 67);
  REQUIRE(c.params.size_ratio.has_value());
  REQUIRE(c.params.fatness.has_value());
  auto ld = ta::layered_td_fat_similar(c, *c.params.size_ratio,
                                       static_cast<long long>(*c.params.fatness));
  // ceil(2 sqrt 2 * ratio) * cfat with the generator's ratio 2, fatness 16
  CHECK(ld.declared_bound == static_cast<long long>(std::ceil(2.0 * std::sqrt(2.0) * 2.0)) * 16);
  auto g = ta::intersection_graph(c);
  CHECK(ta::layered_independence_number(g, ld.td, ld.layering) <= ld.declared_bound);
}

TEST_SUITE_END();
