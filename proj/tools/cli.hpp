#pragma once

#include <ostream>

namespace floatcyl::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kNoValidEquilibrium = 3,
  kRegimeOrDomain = 4,
};

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace floatcyl::cli
