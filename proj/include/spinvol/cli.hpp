#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinvol {

/// Process exit codes. Determined by the kind of result only.
enum class ExitStatus : int {
  Success = 0,      ///< nonsmoothable verdict, or the check passed
  Negative = 1,     ///< inconclusive verdict, or the check failed
  InputError = 2,   ///< usage, malformed input, validation failure
  IoFailure = 3,    ///< file could not be read or written
};

/// Runs one CLI invocation. args[0] is the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace spinvol
