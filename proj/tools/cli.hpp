#pragma once

#include <ostream>

namespace cdt::cli {

/// Runs the command line; returns the process exit code
/// (0 ok, 1 a property violation was found, 2 usage or parse error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cdt::cli
