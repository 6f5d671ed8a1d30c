#pragma once

// Verification reports and their JSON and text renderings.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdisc/fock.hpp"
#include "qdisc/rootdata.hpp"
#include "qdisc/scalar.hpp"

namespace qdisc {

inline constexpr int kReportSchemaVersion = 1;

struct CheckResult {
  std::string suite;
  std::string name;
  /// Short description of the mathematical statement being checked.
  std::string topic;
  bool exact = true;
  bool passed = false;
  std::size_t cases = 0;
  /// Failing instances, or a few representative values when passing.
  std::vector<std::string> witnesses;
  double seconds = 0;
};

struct VerifyOptions {
  int degree = 4;
  int N = 32;
  Rational q0{1, 4};
  std::uint64_t seed = 1;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckResult> checks;
  bool passed() const;
  std::size_t failures() const;
};

/// Suites in report order.
const std::vector<std::string>& suite_names();

/// Runs the selected suites concurrently; "all" selects every suite. The
/// result lists checks in suite order regardless of completion order.
/// Throws std::invalid_argument on an empty selector or unknown suite.
VerifyReport run_verify(const std::vector<std::string>& selectors, const VerifyOptions& options);
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options);

nlohmann::json to_json(const VerifyReport& r);
std::string to_text(const VerifyReport& r);

nlohmann::json to_json(const CartanData& c);
/// Matrix as row-major arrays of canonical Scalar strings.
nlohmann::json to_json(const Mat<Scalar>& m);
nlohmann::json to_json(const Eigen::MatrixXd& m);

std::string rational_str(const Rational& r);

}  // namespace qdisc
