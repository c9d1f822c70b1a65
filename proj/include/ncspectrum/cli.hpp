#pragma once

#include <iosfwd>

namespace ncs::cli {

/// Runs the command line tool. Exit status: 0 success, 1 invalid input or
/// usage, 2 a verification failed (the report carries a witness).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ncs::cli
