#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace slicekit::cli {

// Runs one command line (without the program name). Returns 0 on success,
// 1 when a verify suite fails an assertion, 2 on usage errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace slicekit::cli
