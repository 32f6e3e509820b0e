#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binmosaic::cli {

// Exit codes: 0 when every requested artifact was written and every enabled
// check passed, 1 when a check failed, 2 on bad arguments or input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Fingerprints above this many variables use the adjacent-conditioning scope.
inline constexpr std::size_t kFullFingerprintMaxVars = 6;

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binmosaic::cli
