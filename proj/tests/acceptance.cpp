// One line per criterion; nonzero exit if any fails.

#include <iostream>

#include "moncubic/verification.hpp"

int main() {
  moncubic::VerifyOptions opt;
  bool ok = true;
  for (const auto& r : moncubic::run_acceptance(opt)) {
    std::cout << moncubic::format_result(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
