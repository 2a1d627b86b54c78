#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scf {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,
    exit_no_nib = 3,
    exit_verify_failed = 4,
};

/// Runs the command line; args excludes the program name.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace scf
