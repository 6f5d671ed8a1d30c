#include "qdisc/report.hpp"

#include <iomanip>
#include <sstream>

namespace qdisc {

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (!c.passed) ++n;
  return n;
}

std::string rational_str(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"suite", c.suite},
                      {"name", c.name},
                      {"topic", c.topic},
                      {"mode", c.exact ? "exact" : "numeric"},
                      {"passed", c.passed},
                      {"cases", c.cases},
                      {"witnesses", c.witnesses}});
  return {{"schema_version", kReportSchemaVersion},
          {"options",
           {{"degree", r.options.degree},
            {"N", r.options.N},
            {"q0", rational_str(r.options.q0)},
            {"seed", r.options.seed}}},
          {"passed", r.passed()},
          {"failures", r.failures()},
          {"checks", checks}};
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.suite.size() + c.name.size() + 1);
  for (const auto& c : r.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(static_cast<int>(width))
       << (c.suite + "/" + c.name) << "  " << (c.exact ? "exact  " : "numeric") << "  " << c.cases << " cases  "
       << c.topic << '\n';
    if (!c.passed)
      for (const auto& w : c.witnesses) os << "     " << w << '\n';
  }
  os << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks passed\n";
  return os.str();
}

nlohmann::json to_json(const CartanData& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < c.rank; ++i) {
    std::vector<int> row;
    for (int j = 0; j < c.rank; ++j) row.push_back(c.a(i, j));
    rows.push_back(row);
  }
  const auto roots = positive_roots(c);
  const auto delta = maximal_root(c);
  const auto l0 = l0_candidates(c);
  nlohmann::json grads = nlohmann::json::array();
  for (int i : l0) {
    const auto g = gradation(c, i);
    std::vector<std::string> h;
    for (const auto& x : g.h) h.push_back(rational_str(x));
    grads.push_back({{"l0", i},
                     {"H", h},
                     {"dim_k", g.dim_k},
                     {"dim_p_plus", g.dim_p_plus},
                     {"dim_p_minus", g.dim_p_minus},
                     {"dim_g", g.dim_g}});
  }
  const auto rho = rho_and_check(c);
  auto strs = [](const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(rational_str(x));
    return out;
  };
  return {{"type", c.label()},
          {"rank", c.rank},
          {"cartan_matrix", rows},
          {"symmetrizers", c.d},
          {"positive_roots", roots},
          {"positive_root_count", roots.size()},
          {"maximal_root", delta},
          {"l0_candidates", l0},
          {"gradations", grads},
          {"rho_half_sum", strs(rho.half_sum)},
          {"rho_displayed", strs(rho.displayed)},
          {"rho_check", strs(rho.rho_check)}};
}

nlohmann::json to_json(const Mat<Scalar>& m) { return to_strings(m); }

nlohmann::json to_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<double> row;
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qdisc
