#pragma once

#include <ostream>

namespace pomkit::cli {

/// Runs one command line.  Returns 0 on success, 1 on domain or usage
/// errors, 2 when a resource budget is exhausted.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pomkit::cli
