#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fringe {

/// Exit codes: 0 ok, 1 validation failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `fringe_arena` tool. `args[0]` is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace fringe
