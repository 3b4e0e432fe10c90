#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace incalg {

/// Exit codes: 0 success, 1 verification failure or a negative innerness
/// answer, 2 bad input.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace incalg
