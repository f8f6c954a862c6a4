#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linkbook {

/// Runs one CLI subcommand. Returns the process exit code:
/// 0 success, 1 parse/validation error, 2 dimension error,
/// 3 comparison mismatch.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

} // namespace linkbook
