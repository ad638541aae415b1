#include <cstdlib>
#include <iostream>
#include <string>

#include "acceptance.hpp"

// One PASS/FAIL line per acceptance criterion; a non-zero exit if any fails.
int main(int argc, char** argv) {
  rsurf::acceptance::Options opt;
  if (argc > 1) opt.seed = std::stoull(argv[1]);
  int failed = 0;
  for (const auto& r : rsurf::acceptance::run_all(opt)) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " " << r.name << ": " << r.detail << '\n';
    failed += r.pass ? 0 : 1;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << '\n';
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
