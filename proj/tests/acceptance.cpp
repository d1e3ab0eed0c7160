// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.
#include <cstdio>
#include <cstring>

#include "akh/selftest.hpp"

int main(int argc, char** argv) {
  akh::SelftestLevel level = akh::SelftestLevel::kStandard;
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--quick") == 0) level = akh::SelftestLevel::kQuick;
    if (std::strcmp(argv[k], "--full") == 0) level = akh::SelftestLevel::kFull;
  }
  int failed = 0;
  akh::run_selftest(level, [&](const akh::CriterionResult& r) {
    if (!r.pass) ++failed;
    std::printf("%s %2d %s: %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(), r.seconds);
    if (!r.skipped.empty()) {
      std::printf("     skipped above cap:");
      for (const auto& s : r.skipped) std::printf(" %s", s.c_str());
      std::printf("\n");
    }
    std::fflush(stdout);
  });
  std::printf("%d of 12 criteria passed\n", 12 - failed);
  return failed == 0 ? 0 : 1;
}
