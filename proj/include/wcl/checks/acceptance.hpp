#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wcl/styles.hpp"

namespace wcl::checks {

struct CriterionResult {
  int id = 0;
  std::string tag;    // matched by --filter
  std::string title;
  bool correct = false;
  double seconds = 0;
  double limit_seconds = 0;
  // Recorded findings (counterexamples found by search and the like) and,
  // on failure, what differed.
  std::vector<std::string> notes;

  bool passed() const { return correct && seconds < limit_seconds; }
};

struct AcceptanceOptions {
  // Substring of a criterion tag; empty runs everything.
  std::string filter;
  // Changes one weight of the pinned TSP fixture without updating its
  // expected optimum, to show that the suite notices.
  bool perturb_fixture = false;
  std::uint64_t seed = 0x5eed2024;
};

struct CriterionInfo {
  int id;
  const char* tag;
  const char* title;
};
const std::vector<CriterionInfo>& acceptance_criteria();

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

// "PASS  3 wpcl-laws  weighted algebraic laws  (1.234 s, limit 60 s)"
std::string summary_line(const CriterionResult& r);

// Four cities, optimum tour 0-1-2-3-0 of length 10.
DistanceMatrix pinned_tsp_fixture(bool perturbed = false);
inline constexpr double kPinnedTspOptimum = 10;

}  // namespace wcl::checks
