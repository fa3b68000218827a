#ifndef ORBITSYM_REPORT_HPP
#define ORBITSYM_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace orbitsym {

inline constexpr const char* kReportSchema = "orbitsym-report/1";

/// One verification check: expected vs computed values, both machine
/// readable (exact integers or structured JSON).
struct CheckResult {
  std::string name;
  nlohmann::json expected;
  nlohmann::json computed;
  bool pass = false;
};

struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  bool pass() const;
  /// pass = (expected == computed)
  void add(const std::string& name, nlohmann::json expected, nlohmann::json computed);
  void add_check(CheckResult c) { checks.push_back(std::move(c)); }
  void add_error(const std::string& name, const std::string& message);

  nlohmann::json to_json() const;
  std::string to_text() const;  // one line per check
};

/// A group of reports (verify-all and friends).
struct ReportBundle {
  std::vector<Report> reports;

  bool pass() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace orbitsym

#endif
