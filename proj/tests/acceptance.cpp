#include <iostream>

#include "emcg/verify.hpp"

int main() {
  int failed = 0;
  for (const auto& r : emcg::verify::run_acceptance()) {
    std::cout << emcg::verify::format_line(r) << '\n';
    if (!r.passed) ++failed;
  }
  std::cout << (failed ? "acceptance: FAILED (" + std::to_string(failed) + ")" : std::string("acceptance: all criteria passed"))
            << '\n';
  return failed ? 1 : 0;
}
