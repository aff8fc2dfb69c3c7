// Standalone release gate: runs every acceptance criterion and prints one
// PASS/FAIL line each.  Exit status 0 only when everything passes.

#include <cstdlib>
#include <iostream>
#include <string>

#include "gmk/acceptance.hpp"

int main() {
  int threads = 0;
  if (const char* env = std::getenv("GMK_THREADS")) {
    try {
      threads = std::stoi(env);
    } catch (...) {
      std::cerr << "GMK_THREADS must be an integer\n";
      return 2;
    }
  }
  bool all = true;
  for (const auto& r : gmk::acceptance::run_selected("", threads)) {
    std::cout << gmk::acceptance::format_result(r) << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
