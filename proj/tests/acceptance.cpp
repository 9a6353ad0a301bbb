#include "sdual/verify.hpp"

#include <cstdio>
#include <cstring>

// acceptance [-v]: one line per criterion, exit 1 if any fails
int main(int argc, char** argv)
{
  const bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
  int failed = 0;
  for (int id = 1; id <= sdual::kCriterionCount; ++id) {
    const sdual::CriterionResult r = sdual::run_criterion(id);
    std::printf("criterion %2d  %-4s  %-32s %7.2fs\n", r.id, r.pass ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
    for (const std::string& line : r.details)
      if (verbose || line.rfind("FAIL", 0) == 0) std::printf("    %s\n", line.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  std::printf("%d/%d criteria passed\n", sdual::kCriterionCount - failed, sdual::kCriterionCount);
  return failed ? 1 : 0;
}
