#include <doctest.h>

#include <json.hpp>
#include <stdexcept>

#include "treealpha/props.hpp"

namespace ta = treealpha;

TEST_SUITE_BEGIN("props");

TEST_CASE("failing property is shrunk to the smallest failing size") {
  ta::PropertySuite suite;
  suite.add("always-green", 30, [](ta::SplitMix64&, int) {});
  suite.add("breaks-at-seven", 30, [](ta::SplitMix64&, int size) {
    if (size >= 7) throw std::runtime_error("boom at " + std::to_string(size));
  });
  ta::PropertyConfig cfg;
  cfg.cases = 15;
  auto results = suite.run(cfg);
  REQUIRE(results.size() == 2);
  CHECK(results[0].passed);
  CHECK(results[0].cases_run == 15);
  CHECK_FALSE(results[1].passed);
  CHECK(results[1].failing_size == 7);  // shrink walked down from the first hit
  CHECK(results[1].failure.find("boom at 7") != std::string::npos);
  CHECK_FALSE(ta::PropertySuite::all_passed(results));

  // identical config, identical verdicts
  auto again = suite.run(cfg);
  CHECK(again[1].failing_size == results[1].failing_size);
  CHECK(again[1].failing_case == results[1].failing_case);
  CHECK(again[1].failure == results[1].failure);
}

TEST_CASE("junit and failure reports carry the failing case") {
  ta::PropertySuite suite;
  suite.add("ok", 5, [](ta::SplitMix64&, int) {});
  suite.add("bad & <ugly>", 5, [](ta::SplitMix64&, int) {
    throw std::runtime_error("witness \"quoted\"");
  });
  auto results = suite.run();
  const std::string xml = ta::PropertySuite::junit_xml(results, "demo");
  CHECK(xml.find("tests=\"2\"") != std::string::npos);
  CHECK(xml.find("failures=\"1\"") != std::string::npos);
  CHECK(xml.find("bad &amp; &lt;ugly&gt;") != std::string::npos);
  CHECK(xml.find("&quot;quoted&quot;") != std::string::npos);

  const auto arr = nlohmann::json::parse(ta::PropertySuite::failures_json(results));
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 1);
  CHECK(arr[0]["name"] == "bad & <ugly>");
  CHECK(arr[0]["message"].get<std::string>().find("witness") != std::string::npos);

  ta::PropertySuite green;
  green.add("fine", 3, [](ta::SplitMix64&, int) {});
  auto ok = green.run();
  CHECK(ta::PropertySuite::all_passed(ok));
  CHECK(nlohmann::json::parse(ta::PropertySuite::failures_json(ok)).empty());
}

TEST_SUITE_END();
