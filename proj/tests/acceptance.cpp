// Runs every acceptance criterion and prints one line per criterion.
// Exit status is nonzero unless all of them pass.

#include "qscatter/validation.hpp"

#include <iostream>

int main() {
  bool ok = true;
  for (const auto &r : qscatter::run_acceptance()) {
    std::cout << qscatter::format_result(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
