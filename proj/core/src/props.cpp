#include "treealpha/props.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

#include <json.hpp>

namespace treealpha {

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

/// Runs one case; returns the failure message or empty.
std::string try_case(const Property& prop, std::uint64_t seed,
                     const std::string& name, std::uint64_t case_idx, int size) {
  SplitMix64 rng = split_stream(seed + case_idx, name);
  try {
    prop(rng, size);
  } catch (const std::exception& e) {
    return e.what()[0] ? e.what() : "(property failed without a message)";
  }
  return {};
}

}  // namespace

void PropertySuite::add(std::string name, int max_size, Property p) {
  cases_.push_back(Case{std::move(name), std::max(1, max_size), std::move(p)});
}

std::vector<PropertyResult> PropertySuite::run(const PropertyConfig& cfg) const {
  std::vector<PropertyResult> results;
  for (const Case& c : cases_) {
    PropertyResult res;
    res.name = c.name;
    for (int i = 0; i < cfg.cases; ++i) {
      const int size =
          1 + static_cast<int>((static_cast<long long>(i) * (c.max_size - 1)) /
                               std::max(1, cfg.cases - 1));
      ++res.cases_run;
      std::string msg = try_case(c.prop, cfg.seed, c.name, std::uint64_t(i), size);
      if (msg.empty()) continue;

      // Shrink: same case at ever smaller sizes, keep the smallest failure.
      res.passed = false;
      res.failing_case = std::uint64_t(i);
      res.failing_size = size;
      res.failure = msg;
      for (int s = size - 1; s >= 1; --s) {
        ++res.shrink_steps;
        std::string smaller = try_case(c.prop, cfg.seed, c.name, std::uint64_t(i), s);
        if (smaller.empty()) break;
        res.failing_size = s;
        res.failure = smaller;
      }
      break;
    }
    results.push_back(std::move(res));
  }
  return results;
}

bool PropertySuite::all_passed(const std::vector<PropertyResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.passed; });
}

std::string PropertySuite::junit_xml(const std::vector<PropertyResult>& results,
                                     const std::string& suite_name) {
  int failures = 0;
  for (const auto& r : results) failures += r.passed ? 0 : 1;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<testsuite name=\"" << xml_escape(suite_name) << "\" tests=\""
      << results.size() << "\" failures=\"" << failures << "\">\n";
  for (const auto& r : results) {
    out << "  <testcase name=\"" << xml_escape(r.name) << "\"";
    if (r.passed) {
      out << "/>\n";
    } else {
      out << ">\n    <failure message=\"" << xml_escape(r.failure)
          << "\">case " << r.failing_case << " size " << r.failing_size
          << " after " << r.shrink_steps << " shrink steps</failure>\n  </testcase>\n";
    }
  }
  out << "</testsuite>\n";
  return out.str();
}

std::string PropertySuite::failures_json(const std::vector<PropertyResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    if (r.passed) continue;
    nlohmann::json f;
    f["case"] = r.failing_case;
    f["message"] = r.failure;
    f["name"] = r.name;
    f["shrink_steps"] = r.shrink_steps;
    f["size"] = r.failing_size;
    arr.push_back(std::move(f));
  }
  return arr.dump();
}

}  // namespace treealpha
