#ifndef QLB_REPORT_HPP
#define QLB_REPORT_HPP

#include <string>
#include <vector>

namespace qlb {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
};

/// Deterministic list of named pass/fail checks.
struct Report {
  std::string subject;
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string details = "") {
    checks.push_back({std::move(name), pass, std::move(details)});
  }
  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
};

}  // namespace qlb

#endif
