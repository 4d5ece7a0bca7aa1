#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fglops::cli {

/// exit_code: 0 success, 1 mathematical verdict against the caller
/// (axiom violated, search satisfiable), 2 input or usage error.
struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::vector<std::string> diagnostics;
};

struct Environment {
    /// Value of FGLOPS_TRUNC_MAX, if set.
    std::optional<std::string> trunc_max;

    static Environment from_process();
};

/// Runs one command line (without the program name).
CommandResult run(const std::vector<std::string>& args, const Environment& env = Environment::from_process());

} // namespace fglops::cli
