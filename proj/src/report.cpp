#include "orbitsym/report.hpp"

namespace orbitsym {

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::add(const std::string& name, nlohmann::json expected, nlohmann::json computed) {
  bool ok = expected == computed;
  checks.push_back({name, std::move(expected), std::move(computed), ok});
}

void Report::add_error(const std::string& name, const std::string& message) {
  checks.push_back({name, "(completed)", "error: " + message, false});
}

nlohmann::json Report::to_json() const {
  nlohmann::json out;
  out["schema"] = kReportSchema;
  out["title"] = title;
  out["pass"] = pass();
  out["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    out["checks"].push_back(
        {{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
  return out;
}

std::string Report::to_text() const {
  std::string s;
  for (const auto& c : checks) {
    s += c.pass ? "[PASS] " : "[FAIL] ";
    s += title + " " + c.name + ": expected " + c.expected.dump() + ", computed " +
         c.computed.dump() + "\n";
  }
  return s;
}

bool ReportBundle::pass() const {
  for (const auto& r : reports)
    if (!r.pass()) return false;
  return true;
}

nlohmann::json ReportBundle::to_json() const {
  nlohmann::json out;
  out["schema"] = kReportSchema;
  out["pass"] = pass();
  out["reports"] = nlohmann::json::array();
  for (const auto& r : reports) out["reports"].push_back(r.to_json());
  return out;
}

std::string ReportBundle::to_text() const {
  std::string s;
  for (const auto& r : reports) s += r.to_text();
  s += pass() ? "ALL CHECKS PASSED\n" : "CHECK FAILURES PRESENT\n";
  return s;
}

}  // namespace orbitsym
