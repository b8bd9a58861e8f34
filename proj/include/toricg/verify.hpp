#pragma once

#include <string>
#include <vector>

namespace toricg {

struct CheckResult {
  std::string name;
  int n_max = 0;           // bound actually used for this check
  long long cases = 0;
  bool ok = true;
  std::string detail;      // first failure, or an informational note
};

struct SuiteReport {
  std::string suite;
  int n_max = 0;
  bool informational = false;
  std::vector<CheckResult> checks;

  /// Informational suites always pass.
  bool ok() const;
  std::string to_json() const;
};

const std::vector<std::string>& suite_names();

/// Throws PreconditionError on an unknown suite name or n_max < 1.
SuiteReport run_suite(const std::string& suite, int n_max);

}  // namespace toricg
