// The acceptance criteria as callable checks. Each criterion reports the
// worst normalized ratio (measured / tolerance) across its sub-checks and
// both desk-scale Bessel indices; a ratio <= 1 passes.
#pragma once

#include "wwl/config.hpp"

namespace wwl {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  double ratio;        // worst measured / tolerance
  double seconds;
  std::string details; // raw measurements
};

std::vector<CriterionResult> run_acceptance(const ExperimentConfig& cfg);

}  // namespace wwl
