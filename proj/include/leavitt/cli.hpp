#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leavitt {

// Exit codes: 0 ok, 2 parse error, 3 relation violation, 4 math-domain
// error, 5 oracle failures.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace leavitt
