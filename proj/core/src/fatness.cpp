#include "treealpha/fatness.hpp"

#include <algorithm>

#include "treealpha/rng.hpp"

namespace treealpha {

long long fatness_count_at(const ObjectCollection& c, const Point& center, double size) {
  Point lo(center.size()), hi(center.size());
  for (std::size_t ax = 0; ax < center.size(); ++ax) {
    lo[ax] = center[ax] - size / 2;
    hi[ax] = center[ax] + size / 2;
  }
  long long count = 0;
  for (const auto& o : c.objects)
    if (object_size(o) >= size - kGeomEps && object_intersects_axis_box(o, lo, hi))
      ++count;
  return count;
}

long long estimate_fatness(const ObjectCollection& c, int probes_per_object,
                           std::uint64_t seed) {
  SplitMix64 rng = split_stream(seed, "fatness-probes");
  long long best = 0;
  for (const auto& o : c.objects) {
    const double s = object_size(o);
    if (s <= 0) continue;
    auto [lo, hi] = bounding_box(o);
    std::vector<Point> centers;
    centers.push_back({lo[0], lo[1]});
    centers.push_back({lo[0], hi[1]});
    centers.push_back({hi[0], lo[1]});
    centers.push_back({hi[0], hi[1]});
    centers.push_back({(lo[0] + hi[0]) / 2, (lo[1] + hi[1]) / 2});
    for (int p = 0; p < probes_per_object; ++p)
      centers.push_back({rng.next_range(lo[0] - s / 2, hi[0] + s / 2),
                         rng.next_range(lo[1] - s / 2, hi[1] + s / 2)});
    for (const auto& ctr : centers) best = std::max(best, fatness_count_at(c, ctr, s));
  }
  return best;
}

}  // namespace treealpha
