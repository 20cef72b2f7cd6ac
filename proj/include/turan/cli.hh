#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace turan {

/// Runs one command line (without the program name). Documents go to `out`,
/// diagnostics to `err`. Exit status: 0 success, 1 usage or validation
/// error, 2 internal-consistency error.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

/// Runs `body` and maps what escapes it to an exit status, printing the
/// message to `err`: ValidationError (and subclasses) -> 1, anything else -> 2.
int run_guarded(const std::function<void()>& body, std::ostream& err);

}  // namespace turan
