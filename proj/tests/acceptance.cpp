#include <cstdio>

#include "monopole/acceptance.hpp"

using namespace monopole::acceptance;

int main() {
  std::vector<CheckResult> results;
  int id = 0;
  bool all = true;
  for (const auto& f : criteria()) {
    const CheckResult r = f();
    results.push_back(r);
    all = all && r.passed;
    std::printf("%s [%d] %s: %s (%.2f s)\n", r.passed ? "PASS" : "FAIL", ++id, r.name.c_str(), r.detail.c_str(),
                r.seconds);
    std::fflush(stdout);
  }
  // Criterion 8 is the verify command's full run: the criteria above plus the property suites.
  double seconds = 0.0;
  int passed = 0, total = 0;
  std::string failures;
  for (const auto& f : property_suites()) {
    const CheckResult r = f();
    results.push_back(r);
    std::printf("     %s %s: %s (%.2f s)\n", r.passed ? "ok  " : "FAIL", r.name.c_str(), r.detail.c_str(), r.seconds);
  }
  for (const auto& r : results) {
    seconds += r.seconds;
    ++total;
    if (r.passed) {
      ++passed;
    } else {
      failures += " " + r.suite;
    }
  }
  const bool suites_ok = passed == total;
  std::printf("%s [8] Property suites (verify --suite all): %d/%d checks green%s (%.2f s)\n", suites_ok ? "PASS" : "FAIL",
              passed, total, failures.empty() ? "" : (", failing:" + failures).c_str(), seconds);
  return all && suites_ok ? 0 : 1;
}
