#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pathsum::cli {

struct Check {
  std::string scope;
  std::string name;
  bool passed = false;
  double measured_error = 0.0;
  double tolerance = 0.0;
};

/// scope is one of combinatorics, kernel, stats, ensemble, all.
std::vector<Check> run_validation(const std::string& scope,
                                  std::uint64_t max_terms);

}  // namespace pathsum::cli
