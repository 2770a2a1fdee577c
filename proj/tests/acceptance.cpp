// Acceptance battery: `acceptance <id>` runs one criterion, `acceptance`
// runs all. One PASS/FAIL line per criterion, details indented below.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "groupfact/cli/cli.hpp"

using namespace groupfact::cli;

namespace {

bool report(int id, unsigned threads)
{
  CriterionResult r = run_criterion(id, threads);
  std::printf("criterion %2d: %s  %s  (%.2f s", id, r.pass ? "PASS" : "FAIL", r.title.c_str(),
              r.seconds);
  if (r.limit_seconds > 0)
    std::printf(", limit %.0f s", r.limit_seconds);
  std::printf(")\n");
  for (auto const &d : r.details)
    std::printf("    %s\n", d.c_str());
  std::fflush(stdout);
  return r.pass;
}

}  // namespace

int main(int argc, char **argv)
{
  unsigned threads = resolve_threads();
  if (argc > 2) {
    std::cerr << "usage: acceptance [criterion 1.." << kCriteria << "]\n";
    return 2;
  }
  if (argc == 2) {
    int id = std::atoi(argv[1]);
    if (id < 1 || id > kCriteria) {
      std::cerr << "criterion must be 1.." << kCriteria << "\n";
      return 2;
    }
    return report(id, threads) ? 0 : 1;
  }
  int failed = 0;
  for (int id = 1; id <= kCriteria; ++id)
    failed += !report(id, threads);
  std::printf("%d/%d criteria passed\n", kCriteria - failed, kCriteria);
  return failed == 0 ? 0 : 1;
}
