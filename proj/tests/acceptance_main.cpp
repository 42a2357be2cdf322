// Prints one PASS/FAIL line per acceptance criterion and exits nonzero when
// anything fails.

#include <cstdio>

#include "fraisse/acceptance.hpp"

int main() {
  bool all = true;
  for (const auto& c : fraisse::run_acceptance()) {
    all = all && c.pass;
    std::printf("%s  %s — %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.c_str());
  }
  return all ? 0 : 1;
}
