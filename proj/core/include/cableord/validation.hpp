#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace cableord {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Named pass/fail checks. Validators never throw; callers decide what a failure means.
struct ValidationReport {
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  /// False when the check is absent or failed.
  bool passed(std::string_view name) const {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
    return it != checks.end() && it->passed;
  }

  bool has(std::string_view name) const {
    return std::any_of(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
  }
};

}  // namespace cableord
