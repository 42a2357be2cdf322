#pragma once

#include <string>
#include <vector>

namespace fraisse {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the full acceptance suite: exhaustive small-size cross-checks of the
/// engine against independent oracles, exact combinatorial counts, and the
/// expected quotient shapes. Results come back in a fixed order.
std::vector<CriterionResult> run_acceptance();

}  // namespace fraisse
