#pragma once

#include <iosfwd>

namespace rd::cli {

// Runs one command line. Exit codes: 0 true/success, 1 false verdict, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rd::cli
