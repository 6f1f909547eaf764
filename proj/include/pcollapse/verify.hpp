// Named invariant suites behind `pcollapse verify`.
#pragma once

#include <string>
#include <vector>

#include "pcollapse/json_io.hpp"

namespace pcollapse {

struct CheckOutcome {
  std::string suite;
  std::string tag;
  bool passed = true;
  std::string detail;
  json counterexample;  // null when passed
};

struct SuiteReport {
  std::vector<CheckOutcome> checks;
  bool passed() const;
};

/// arith, closed-form, criteria, fibonacci, tetrahedra, reciprocity, recurrence, all.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_verify(const std::string& suite, int jobs = 0);

json to_json(const CheckOutcome& outcome);

}  // namespace pcollapse
