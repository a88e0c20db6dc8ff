#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hpnet {

/// Command-line front end. `args` excludes the program name.
/// Exit codes: 0 all requested checks pass, 1 a check failed,
/// 2 usage or input parse error (diagnostics on `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hpnet
