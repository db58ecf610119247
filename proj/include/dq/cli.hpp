#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dq {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCertification = 1;
inline constexpr int kExitUsage = 2;

// Parses args (without the program name) and runs one subcommand:
// alpha, dbound, sums, counts, prime-swap, oracle or certify-all.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dq
