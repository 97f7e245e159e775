#ifndef TRIPART_CLI_HPP
#define TRIPART_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tripart::cli {

enum ExitCode : int {
    kOk = 0,
    kNo = 1,  // solve found no partition; bench mismatch
    kUsage = 2,
    kParseOrIo = 3,
    kCapacity = 4,
};

/// Runs one command line (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tripart::cli

#endif
