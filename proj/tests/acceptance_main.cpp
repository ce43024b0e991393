// Acceptance suite runner: one pass/fail line per criterion, nonzero exit on
// any failure.

#include <cstdlib>
#include <iostream>
#include <thread>

#include "wrc/acceptance.hpp"

int main() {
  wrc::AcceptanceOptions opt;
  unsigned hw = std::thread::hardware_concurrency();
  opt.workers = hw > 0 ? hw : 4;
  if (const char* env = std::getenv("WRC_ACCEPTANCE_WORKERS"))
    opt.workers = static_cast<unsigned>(std::atoi(env));
  auto results = wrc::run_acceptance(opt, &std::cout);
  bool ok = wrc::all_passed(results);
  std::cout << (ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << "\n";
  return ok ? 0 : 1;
}
