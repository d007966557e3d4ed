#pragma once

#include <ostream>

namespace bgr::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kUsage = 2, kInconclusive = 3 };

/// Entry point of bgrlab; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bgr::cli
