#ifndef HSPECHT_CLI_HPP
#define HSPECHT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hspecht::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_falsified = 1;
inline constexpr int exit_usage = 2;

/// Runs the command line `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns 0 on success, 1 when a check is
/// falsified and 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hspecht::cli

#endif
