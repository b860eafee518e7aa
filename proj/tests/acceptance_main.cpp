// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "treedens/verify.hpp"

using namespace treedens;

namespace {

int failures_total = 0;

void run(int number, const std::string& label,
         const std::function<VerifyReport()>& suite,
         const std::string& extra_key = "") {
  const auto start = std::chrono::steady_clock::now();
  const VerifyReport report = suite();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::string note;
  if (!extra_key.empty() && report.details.contains(extra_key))
    note = "  " + extra_key + "=" + report.details[extra_key].dump();
  std::printf("criterion %02d %-26s %s  %6.2fs%s\n", number, label.c_str(),
              report.pass ? "PASS" : "FAIL", seconds, note.c_str());
  if (!report.pass) {
    ++failures_total;
    const std::size_t shown = std::min<std::size_t>(report.failures.size(), 5);
    for (std::size_t i = 0; i < shown; ++i)
      std::printf("    witness: %s\n", report.failures[i].c_str());
    if (report.failures.size() > shown)
      std::printf("    ... and %zu more\n", report.failures.size() - shown);
  }
}

VerifyReport compose_and_iterate() {
  VerifyReport a = verify_compose();
  VerifyReport b = verify_iterate();
  VerifyReport merged;
  merged.suite = "compose+iterate";
  merged.pass = a.pass && b.pass;
  merged.failures = a.failures;
  merged.failures.insert(merged.failures.end(), b.failures.begin(),
                         b.failures.end());
  merged.details = {{"compose", a.details}, {"iterate", b.details}};
  return merged;
}

}  // namespace

int main() {
  std::printf("acceptance: exact verification at the criteria's stated ranges\n");
  run(1, "oracle equivalence", [] { return verify_oracle(); },
      "pairs_checked");
  run(2, "completeness identity", [] { return verify_completeness(); },
      "identities_checked");
  run(3, "star bound & maximizer", [] { return verify_star_bound(); });
  run(4, "star formula values", [] { return verify_star_formulas(); });
  run(5, "caterpillar closed form", [] { return verify_caterpillars(); },
      "triples_checked");
  run(6, "monotone maxima", [] { return verify_monotone(); });
  run(7, "G-transform injection", [] { return verify_gmap(); },
      "pairs_checked");
  run(8, "composition & iteration", compose_and_iterate);
  run(9, "T* construction", [] { return verify_tstar(); });
  run(10, "caterpillar containment", [] { return verify_containment(); });
  if (failures_total == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", failures_total);
  return 1;
}
