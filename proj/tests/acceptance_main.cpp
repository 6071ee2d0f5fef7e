#include "hermlie/acceptance.hpp"

#include <iostream>

int main() {
  bool all = true;
  for (const auto& r : hermlie::run_acceptance()) {
    std::cout << hermlie::format_result(r) << std::endl;
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
