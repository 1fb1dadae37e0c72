#ifndef DUALQKD_TOOLS_CLI_HPP
#define DUALQKD_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dualqkd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dualqkd::cli

#endif  // DUALQKD_TOOLS_CLI_HPP
