#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symspace::cli {

/// Runs one command line (args excludes the program name). JSON goes to out,
/// human-readable summaries to err. Returns 0 on success, 1 on domain errors
/// (a matrix outside the space, a branch violation, …), 2 on usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace symspace::cli
