#ifndef C5MIN_TOOLS_CLI_HPP
#define C5MIN_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace c5min::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. args excludes the program name. Reports go to `out`
/// unless --out is given; diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace c5min::cli

#endif  // C5MIN_TOOLS_CLI_HPP
