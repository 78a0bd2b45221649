#pragma once

#include <string>
#include <vector>

namespace drsrd {

// Command-line entry point (argv without the program name is also accepted
// via the vector overload). Returns the process exit status; diagnostics go
// to stderr.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);

}  // namespace drsrd
