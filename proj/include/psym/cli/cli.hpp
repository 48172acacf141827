#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "psym/symmetry/verdict.hpp"

namespace psym::cli {

enum ExitCode : int {
    kExitSymmetric = 0,
    kExitNotSymmetric = 1,
    kExitError = 2,
    kExitVerifyMismatch = 3,
};

/// Runs the command line `args` (without the program name). Human-readable
/// output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One JSON object per line; the first line is the versioned header.
std::string report_header();
std::string verdict_json(const SymmetryVerdict& v, std::size_t k);

/// Splits "(1 2),(1 2 3)" at top-level commas.
std::vector<std::string> split_group(const std::string& text);

}  // namespace psym::cli
