#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qci {

// Dispatch one command line (without the program name). Returns the process
// exit code: 0 success, 1 validation/computation error, 2 suite failure
// (report still emitted), 64 usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qci
