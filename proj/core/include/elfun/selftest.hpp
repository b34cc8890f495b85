#pragma once

// Acceptance checks shared by the `selftest` command and the test suite.

#include <cstdint>
#include <string>
#include <vector>

#include "elfun/oracle.hpp"

namespace elfun {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;  // measured quantities, one line
  double seconds = 0;
};

struct SelftestReport {
  std::vector<CriterionResult> criteria;
  std::vector<oracle::ReportRow> error_rows;  // random-sample accuracy table

  bool all_pass() const;
};

/// Runs one check (1..10).  Throws std::out_of_range for other ids.
CriterionResult run_criterion(int id, std::uint64_t seed, SelftestReport* report = nullptr);

/// Runs every check in order.
SelftestReport run_selftest(std::uint64_t seed);

inline constexpr int kCriterionCount = 10;

}  // namespace elfun
