#pragma once

// Command-line harness entry points.  Exit codes: 0 all checks pass,
// 1 check failure (report still written), 2 usage or input error.

#include <string>
#include <vector>

namespace hpjts {

inline constexpr const char* kLibraryVersion = "0.1.0";

int run_cli(int argc, const char* const* argv);

// The eval subcommand's operation names.
const std::vector<std::string>& eval_op_names();

}  // namespace hpjts
