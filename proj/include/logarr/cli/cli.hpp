#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "logarr/report/report.hpp"

namespace logarr::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kIncomplete = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The values the Edelman-Reiner demo must reproduce.
report::Json edelman_reiner_golden();

struct DemoResult {
  report::Json computed;
  /// One entry per differing field: {"field", "expected", "actual"}.
  report::Json mismatches;
  bool probabilistic = false;
};

DemoResult demo_edelman_reiner(const report::Json& golden, Backend backend = Backend::Exact);

}  // namespace logarr::cli
