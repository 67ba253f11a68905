// Command-line front end. Callable in-process so tests can drive it.

#ifndef FLAGSPACE_CLI_HPP
#define FLAGSPACE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace flagspace {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadInput = 2;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagspace

#endif  // FLAGSPACE_CLI_HPP
