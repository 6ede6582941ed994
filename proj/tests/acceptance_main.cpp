// Runs every acceptance criterion and prints one line per criterion:
//   <id> PASS|FAIL <title>
// followed by its checks. Exit status is 0 only if all pass.
// Optional arguments select criteria, e.g. `acceptance c1 c8`.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "revwalk/acceptance.hpp"

int main(int argc, char** argv) {
  namespace acc = revwalk::acceptance;
  std::vector<std::string> ids(argv + 1, argv + argc);
  if (ids.empty()) ids = acc::criterion_ids();
  acc::Config cfg;
  cfg.progress = [](const std::string& s) { std::cerr << "  .. " << s << std::endl; };
  int failed = 0;
  for (const auto& id : ids) {
    const acc::CriterionResult r = acc::run_criterion(id, cfg);
    std::printf("%s %s %s (%.1f s)\n", r.id.c_str(), r.pass() ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
    for (const auto& c : r.checks)
      std::printf("    [%s] %s = %.6g (threshold %.6g)\n", c.pass ? "ok" : "x", c.statistic.c_str(), c.value, c.threshold);
    std::fflush(stdout);
    failed += !r.pass();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(ids.size()) - failed, ids.size());
  return failed == 0 ? 0 : 1;
}
