#pragma once

#include <string>

#include "config.hpp"
#include "csv.hpp"

namespace epsreg::cli {

struct RunResult {
  CsvTable table{{}};
  std::string summary;  // one line, printed on stdout
  bool passed = true;   // false when a verification experiment misses its tolerances
};

/// Runs one experiment. Rows follow the schedule order regardless of the
/// thread count.
RunResult run_experiment(const ExperimentConfig& config, unsigned threads);

}  // namespace epsreg::cli
