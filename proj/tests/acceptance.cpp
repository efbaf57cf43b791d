#include <cstdio>
#include <cstdlib>

#include "fibstab/sweep.hpp"

int main(int argc, char **argv) {
  const std::uint64_t seed =
      argc > 1 ? std::strtoull(argv[1], nullptr, 10) : fibstab::kDefaultSeed;
  bool all = true;
  for (const auto &r : fibstab::run_acceptance(seed)) {
    std::printf("%s criterion %d: %s (%ld checks, %ld failures, %.2fs)", r.pass() ? "PASS" : "FAIL",
                r.id, r.title.c_str(), r.checks, r.failures, r.seconds);
    if (r.redraws > 0)
      std::printf(" [non-generic redraws: %ld]", r.redraws);
    if (!r.pass())
      std::printf(" first failure: %s", r.first_failure.c_str());
    std::printf("\n");
    all = all && r.pass();
  }
  return all ? 0 : 1;
}
