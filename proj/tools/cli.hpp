#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bvpdn::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kUsage = 2,
    kAccuracy = 3,
};

/// Runs the command line `bvpdn args...` (args excludes the program name).
/// Results go to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bvpdn::cli
