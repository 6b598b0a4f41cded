#pragma once

#include <iosfwd>

namespace leviform {

/// Entry point of the `leviform` command-line tool. Returns the exit code:
/// 0 on success, 1 on a domain error (reported on `err` as
/// "error: CATEGORY: message"), 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leviform
