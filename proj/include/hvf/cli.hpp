#ifndef HVF_CLI_HPP
#define HVF_CLI_HPP

#include <iosfwd>

namespace hvf::cli
{

enum ExitCode : int {
    ok = 0,
    usage = 1,
    degeneracy = 2,
    verification_failed = 3,
    calibration_failed = 4,
};

// Runs one command line; writes results to out and diagnostics to err.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace hvf::cli

#endif
