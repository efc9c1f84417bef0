#pragma once

#include "etaforge/refine.hpp"

namespace etaforge {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  bool excluded = false;  // documented out-of-scope items
  std::string detail;
  double seconds = 0.0;
};

/// Runs every acceptance criterion; deterministic output.
std::vector<CriterionResult> run_acceptance_suite(std::size_t budget = kDefaultEnumBudget);

/// True iff every non-excluded criterion passed.
bool suite_passed(const std::vector<CriterionResult>& results);

/// One line per criterion, "PASS"/"FAIL"/"EXCLUDED" prefixed.
std::string format_suite(const std::vector<CriterionResult>& results);

}  // namespace etaforge
