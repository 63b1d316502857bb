#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vtcodes::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,   // bad flags or parameters
    kCodecFailure = 2, // no candidate, non-member, ambiguity
};

/// Runs one command line (args[0] is the program name). Results go to `out`,
/// diagnostics to `err`; `in` supplies --word / --message when the flag is omitted.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace vtcodes::cli
