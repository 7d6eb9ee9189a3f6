#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace kronecker {

struct Failure {
  std::string check;
  std::string inputs;
  std::string expected;
  std::string actual;
};

/// Outcome of a verification suite. Suites keep running after a failure so
/// that the report counts every broken case, but `failures.front()` is always
/// the first one encountered in the deterministic scan order.
struct Report {
  std::string suite;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  std::map<std::string, std::string> stats;
  double wall_seconds = 0.0;

  bool ok() const { return failures.empty(); }

  void check(bool holds, std::string name, std::string inputs, std::string expected = {},
             std::string actual = {}) {
    ++cases;
    if (!holds)
      failures.push_back({std::move(name), std::move(inputs), std::move(expected), std::move(actual)});
  }

  void merge(const Report& other) {
    cases += other.cases;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    for (const auto& [key, value] : other.stats) stats[key] = value;
  }
};

}  // namespace kronecker
