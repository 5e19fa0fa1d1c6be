#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace koszul {

enum class VerifyLevel { fast, full };

struct CriterionResult {
  std::string id;       // "C01" ... "C13"
  std::string title;
  bool passed = false;
  std::string detail;   // counts on success, first mismatch on failure
  std::int64_t ms = 0;
};

// Runs the self-verification suite. fast trims sample counts and the large
// parameters so a fresh build can be smoke-checked in well under a minute;
// full runs every check at its advertised range.
std::vector<CriterionResult> run_verification(VerifyLevel level);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace koszul
