#pragma once

// Command-line front end: evaluate terms, apply values, verify trackers,
// classify and reflect assemblies, lift them, compute path components, embed
// finite spaces, and run the demonstration commands. Reports are
// deterministic for identical invocations; exit codes separate success (0),
// refutation/violation (1), inconclusive-at-this-budget (2) and usage errors
// (64).

#include <iosfwd>
#include <string>
#include <vector>

namespace scott {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;

// Runs one command; args exclude the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scott
