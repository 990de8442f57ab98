#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ogs::cli {

/// Exit statuses of the ogs tool.
enum Exit : int {
  ok = 0,
  verification_failed = 1,
  bad_input = 2,
  domain_error = 3,
};

/**
 * Runs one invocation. `args` excludes the program name. Results go to `out`,
 * diagnostics to `err`; `in` is read when the input argument is omitted.
 */
int run(std::vector<std::string> const &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace ogs::cli
