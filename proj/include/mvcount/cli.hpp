#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mvcount::cli {

/// Runs one command line (without the program name). Writes the output
/// record to `out` and diagnostics to `err`. Returns 0 on success, 2 on
/// invalid input, 1 on an internal failure or a failed verification.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, char** argv);

}  // namespace mvcount::cli
