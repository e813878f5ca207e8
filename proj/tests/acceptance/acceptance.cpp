// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Arguments, if any, restrict the run to the named suites or criterion numbers.

#include <iostream>

#include "verify/verify.hpp"

int main(int argc, char** argv) {
  using namespace jblocks::verify;
  std::vector<std::string> only(argv + 1, argv + argc);
  const auto results = run(select(only), Options{});
  bool all = true;
  for (const auto& r : results) {
    std::cout << summary_line(r) << '\n';
    for (const auto& f : r.failures) std::cout << "    failure: " << f << '\n';
    all = all && r.passed;
  }
  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return all ? 0 : 1;
}
