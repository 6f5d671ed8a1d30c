#include <doctest.h>

#include <set>

#include "qdisc/report.hpp"

using namespace qdisc;

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  CHECK(names.size() == 9);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  CHECK(names.front() == "scalars");
}

TEST_CASE("selectors") {
  VerifyOptions o;
  CHECK_THROWS_AS(run_verify({}, o), std::invalid_argument);
  CHECK_THROWS_AS(run_verify({"nope"}, o), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("nope", o), std::invalid_argument);
}

TEST_CASE("JSON report") {
  VerifyOptions o;
  o.degree = 2;
  const auto r = run_verify({"scalars", "rootdata"}, o);
  CHECK(r.passed());
  CHECK(r.failures() == 0);
  const auto j = to_json(r);
  CHECK(j.at("schema_version") == kReportSchemaVersion);
  CHECK(j.at("checks").is_array());
  CHECK(j.at("checks").size() == r.checks.size());
  for (const auto& c : j.at("checks")) {
    CHECK(c.contains("suite"));
    CHECK(c.contains("topic"));
    CHECK(c.at("mode").is_string());
    CHECK_FALSE(c.contains("seconds"));
  }
  // Suites appear in registry order and the output is deterministic.
  CHECK(r.checks.front().suite == "scalars");
  CHECK(r.checks.back().suite == "rootdata");
  CHECK(to_json(run_verify({"rootdata", "scalars"}, o)).dump() == j.dump());
  CHECK(to_text(r).find("PASS") != std::string::npos);
}

TEST_CASE("root data JSON") {
  const auto j = to_json(build('A', 2));
  CHECK(j.at("cartan_matrix") == nlohmann::json::array({nlohmann::json::array({2, -1}), nlohmann::json::array({-1, 2})}));
  CHECK(rational_str(Rational(4, 3)) == "4/3");
  CHECK(rational_str(Rational(2)) == "2");
}
