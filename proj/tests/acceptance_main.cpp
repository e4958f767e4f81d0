// Acceptance suite runner: one PASS/FAIL line per criterion, exit code 0 only
// when every criterion holds.

#include <cstdio>
#include <iostream>

#include "shfkit/selftest.hpp"

int main() {
  try {
    auto results = shfkit::run_acceptance();
    std::cout << shfkit::format_results(results);
    return shfkit::all_passed(results) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "acceptance suite aborted: " << e.what() << "\n";
    return 1;
  }
}
