#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dtqft::tools {

/// Usage errors exit with 2; any failed check or command exits with 1.
enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_usage = 2 };

/// Runs one command. `args` excludes the program name. `env_field` is the
/// value of DTQFT_FIELD as read once at startup, if set.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::optional<std::string>& env_field = std::nullopt);

}  // namespace dtqft::tools
