#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hermlie {

struct CriterionResult {
  int id = 0;
  std::string title;
  std::string citation;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double time_limit = 0;
};

struct AcceptanceOptions {
  /// Flip the expected Kaehler verdict of this catalog entry's first witness.
  std::optional<std::string> tamper_entry;
  /// Run only these criteria (1-based); empty runs all.
  std::vector<int> only;
};

/// Runs the reproduction criteria in order.  Tolerances and time limits are
/// fixed here, not configurable.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// One line per criterion, e.g. "[PASS] 3 shear oracle equivalence (1.2 s / 60 s): ...".
std::string format_result(const CriterionResult& r);

}  // namespace hermlie
