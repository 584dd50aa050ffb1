#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "treealpha/rng.hpp"

namespace treealpha {

/// A property draws a random instance from the rng at the given size and
/// throws (std::exception) when violated.  Repeated runs with the same rng
/// state and size must behave identically, which makes shrinking sound.
using Property = std::function<void(SplitMix64&, int size)>;

struct PropertyConfig {
  int cases = 60;
  std::uint64_t seed = 2026;
};

struct PropertyResult {
  std::string name;
  int cases_run = 0;
  bool passed = true;
  std::string failure;       // first failing case, post-shrink
  std::uint64_t failing_case = 0;
  int failing_size = 0;
  int shrink_steps = 0;
};

class PropertySuite {
 public:
  /// Sizes ramp from 1 to max_size across the configured case count.
  void add(std::string name, int max_size, Property p);

  /// Runs every property; on failure retries the same case at smaller sizes
  /// and reports the smallest size that still fails.
  std::vector<PropertyResult> run(const PropertyConfig& cfg = {}) const;

  static bool all_passed(const std::vector<PropertyResult>& results);
  static std::string junit_xml(const std::vector<PropertyResult>& results,
                               const std::string& suite_name);
  /// Machine-readable dump of the failures (empty array when green).
  static std::string failures_json(const std::vector<PropertyResult>& results);

 private:
  struct Case {
    std::string name;
    int max_size;
    Property prop;
  };
  std::vector<Case> cases_;
};

}  // namespace treealpha
