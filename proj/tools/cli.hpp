#ifndef WILDSURF_TOOLS_CLI_HPP
#define WILDSURF_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wildsurf::cli {

// Exit codes: 0 definitive result, 1 invalid input or failed check, 2 an
// honest Unknown (a search bound was exhausted).
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUnknown = 2;

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wildsurf::cli

#endif  // WILDSURF_TOOLS_CLI_HPP
