#pragma once

// Pass/fail records produced by the verification suites.

#include <cstddef>
#include <string>
#include <vector>

namespace flagschur {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  void merge(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
  std::size_t failures() const {
    std::size_t k = 0;
    for (const auto& c : checks) k += c.passed ? 0 : 1;
    return k;
  }
  bool passed() const { return failures() == 0; }
};

}  // namespace flagschur
