#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holozeta::cli {

enum ExitCode : int { Ok = 0, VerificationFailed = 1, InputError = 2 };

// Runs one subcommand. `args` excludes the program name. Reports go to `out`
// as "key: value" lines; input errors go to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace holozeta::cli
