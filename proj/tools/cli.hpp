#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wt::cli {

/// Exit codes of the `wt` tool.
enum Exit : int {
    ok = 0,
    failure = 1,
    parse_error = 2,
    not_graphic = 3,
    not_in_class = 4,
    size_bound = 5,
};

/// Runs the tool on `args` (without the program name), writing to `out` and `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wt::cli
