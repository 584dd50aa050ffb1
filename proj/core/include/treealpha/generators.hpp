#pragma once

#include <cstdint>
#include <string>

#include "treealpha/geometry.hpp"
#include "treealpha/rational.hpp"

namespace treealpha {

/// Reproducible instance recipes. The same spec always yields the same
/// collection, bit for bit; every random draw comes from a labelled
/// sub-stream of the single seed.
struct GeneratorSpec {
  /// unit_disks | fat_disks | similarly_sized_disks | unit_width_rects |
  /// grid_paths_v | grid_paths_e | grid_disks | biclique_rects
  std::string kind = "unit_disks";
  int n = 10;
  std::uint64_t seed = 1;
  /// Side of the square placement window. 0 selects a density-neutral
  /// default that grows with sqrt(n), keeping local crowding flat.
  double window = 0.0;

  double radius = 1.0;        // unit_disks / grid_disks
  double width = 1.0;         // unit_width_rects
  double size_ratio = 2.0;    // similarly_sized_disks: diameters within [d, ratio*d]
  double fatness = 16.0;      // declared constant carried by fat/similar kinds
  long long horiz_bound = 2;  // grid paths: max horizontal extent
  int max_bends = 2;          // grid paths
};

ObjectCollection generate_instance(const GeneratorSpec& spec);

/// Deterministic per-vertex weights: positive integers in [lo, hi].
std::vector<Weight> generate_weights(int n, std::uint64_t seed, long long lo,
                                     long long hi);

/// Parses "unit" or "uniform:<lo>:<hi>:<seed>" into n weights.
std::vector<Weight> weights_from_spec(const std::string& spec, int n);

}  // namespace treealpha
