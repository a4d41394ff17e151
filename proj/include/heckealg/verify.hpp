#pragma once

#include <string>
#include <vector>

namespace heckealg {

// Knobs for the property suites.  max_n bounds the symmetric-group rank (and
// the tensor parameters) from above; each check also carries its own stated
// ceiling, and the smaller of the two wins.
struct VerifyOptions {
  int max_n = 3;
  unsigned long seed = 20260821;
};

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> notes;
  bool ok() const { return failures == 0; }
};

// registered suite names, in canonical order
std::vector<std::string> suite_names();

// run one suite; throws std::invalid_argument for an unknown name.  A check
// that throws is counted as a failure, not a crash.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const VerifyOptions& opt);

}  // namespace heckealg
