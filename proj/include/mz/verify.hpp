#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mz/grp.hpp"
#include "mz/oracle.hpp"

namespace mz {

enum class CheckStatus { Pass, Fail, Skipped, Discrepancy };
const char* status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  std::string formula;
  std::string group;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerifyOptions {
  int q = 2;
  // Raise enumeration caps and run the exhaustive variants regardless of size.
  bool deep = false;
  int jobs = 1;
  // Supplies enumerated theta functions (possibly from a cache) for an oracle.
  std::function<void(Oracle&)> prepare_oracle;
};

EnumCaps caps_for(bool deep);

// Runs every invariant at the given q for GL(2) and PGL(2).
std::vector<CheckResult> verify_suite(const VerifyOptions& opts);

}  // namespace mz
