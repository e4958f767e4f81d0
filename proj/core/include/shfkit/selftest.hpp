#ifndef SHFKIT_SELFTEST_HPP
#define SHFKIT_SELFTEST_HPP

#include <string>
#include <vector>

namespace shfkit {

/// One acceptance criterion outcome. `detail` carries the measured worst
/// residuals / counts behind the verdict.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Run the full acceptance suite (deterministic, fixed seeds). Criterion 0 is
/// the shipped-data-vs-regeneration agreement check; 1..9 are the numbered
/// verification criteria of the library.
std::vector<CriterionResult> run_acceptance();

/// Render "PASS|FAIL <id> <name>: <detail>" lines.
std::string format_results(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace shfkit

#endif
