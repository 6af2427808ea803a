// Runs every acceptance suite at full size and prints one line per criterion.

#include <cstdio>

#include "nbhd/generate.hpp"
#include "nbhd/suites.hpp"

int main() {
  int failed = 0;
  for (const auto& result : nbhd::suites::run_all(nbhd::suites::Level::full, nbhd::kDefaultSeed)) {
    std::printf("%s\n", nbhd::suites::format(result).c_str());
    std::fflush(stdout);
    if (!result.passed()) ++failed;
  }
  std::printf("%s: %d of 9 criteria failed\n", failed == 0 ? "PASS" : "FAIL", failed);
  return failed == 0 ? 0 : 1;
}
