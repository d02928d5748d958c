// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cvd::cli {

enum ExitCode : int {
    kOk = 0,
    kFindings = 1,
    kPartial = 2,
    kUsage = 64,
    kData = 65,
};

/// Runs one invocation. `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cvd::cli
