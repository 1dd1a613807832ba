#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace delpezzo {

inline constexpr const char* kToolVersion = "1.0.0";

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitBadInput = 2;

// Runs one subcommand; args excludes the program name. The report goes to
// `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace delpezzo
