#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qscatter {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  //! The quantity compared against `threshold`; its meaning is per criterion
  //! and spelled out in `detail`.
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct ValidationOptions {
  //! Closed-form and rectangular-barrier checks only.
  bool quick = false;
  //! Replaces the adaptive step everywhere with this fixed one.
  std::optional<double> forced_step;
  //! Passed through to every sweep; 0 means hardware concurrency.
  unsigned threads = 0;
};

//! Runs the acceptance criteria in id order. A criterion that throws is
//! reported as failed with the error text; nothing escapes.
std::vector<CriterionResult> run_acceptance(const ValidationOptions &options = {});

//! Single `PASS`/`FAIL` line.
std::string format_result(const CriterionResult &result);

} // namespace qscatter
