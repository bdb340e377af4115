// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <iostream>

#include "wcl/checks/acceptance.hpp"

int main() {
  const auto results = wcl::checks::run_acceptance({});
  bool all = true;
  for (const auto& r : results) {
    std::cout << wcl::checks::summary_line(r) << "\n";
    for (const auto& n : r.notes) std::cout << "    " << n << "\n";
    all = all && r.passed();
  }
  return all ? 0 : 1;
}
