#ifndef LOGDER_CLI_HPP
#define LOGDER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace logder::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// Runs one command. `args` excludes the program name. The report goes to
/// `out`, usage problems to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logder::cli

#endif  // LOGDER_CLI_HPP
