// Prints one PASS/FAIL line per acceptance criterion.  Exit status is 0 only
// when every criterion passes.  Optional arguments: criterion ids to run, and
// --seed=N.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "elfun/selftest.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20180101;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      seed = std::strtoull(argv[i] + 7, nullptr, 10);
    } else {
      const int id = std::atoi(argv[i]);
      if (id < 1 || id > elfun::kCriterionCount) {
        std::fprintf(stderr, "usage: %s [--seed=N] [criterion 1..10 ...]\n", argv[0]);
        return 2;
      }
      ids.push_back(id);
    }
  }
  if (ids.empty())
    for (int id = 1; id <= elfun::kCriterionCount; ++id) ids.push_back(id);

  int failed = 0;
  for (int id : ids) {
    const elfun::CriterionResult r = elfun::run_criterion(id, seed);
    std::printf("criterion %2d: %s  %s (%.2f s)\n    %s\n", r.id, r.pass ? "PASS" : "FAIL",
                r.title.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  std::printf("%zu criteria, %d failed\n", ids.size(), failed);
  return failed == 0 ? 0 : 1;
}
