#pragma once

#include "torelli/bigint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace torelli {

// Resource plan shared by the verification suites. The defaults are the
// largest configuration the checks are designed to pass at; shrinking a
// field turns the out-of-reach checks into explicit skips.
struct Budget {
  int genus = 4;
  int max_degree = 6;  // largest Lie degree driven through the homomorphisms
  int cutoff = 8;      // word degree cutoff for Magnus expansions
  std::uint64_t seed = 1;
  int samples = 50;
};

enum class Status { pass, fail, skip };

struct CheckResult {
  std::string name;  // cNN.<slug> for numbered claims, x.<slug> for extras
  Status status = Status::fail;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_ok() const;  // no failures (skips allowed)
};

const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const Budget& b);

// All suites in order plus the global bracket post-condition report.
std::vector<SuiteReport> run_all_suites(const Budget& b);

std::string status_name(Status s);

} // namespace torelli
