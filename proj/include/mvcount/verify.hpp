#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mvcount::verify {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed;
  std::string detail;
  long long elapsed_ms;
};

/// arith, prototypes, qforms, zagier, ideals, euler, counting, volume.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all", stopping at the first failing
/// check. Progress lines go to `progress` when it is non-null.
std::vector<CheckResult> run(const std::string& suite, unsigned threads,
                             std::ostream* progress);

}  // namespace mvcount::verify
