// Full acceptance run: every verification criterion at full strength, one
// line per criterion. Exits nonzero if anything fails.

#include <cstdio>

#include "koszul/verify.hpp"

int main() {
  auto results = koszul::run_verification(koszul::VerifyLevel::full);
  int failures = 0;
  for (const auto& r : results) {
    std::printf("%s %s  %s (%s, %lld ms)\n", r.id.c_str(),
                r.passed ? "PASS" : "FAIL", r.title.c_str(), r.detail.c_str(),
                static_cast<long long>(r.ms));
    failures += !r.passed;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
