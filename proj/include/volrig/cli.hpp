#ifndef VOLRIG_CLI_HPP
#define VOLRIG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace volrig::cli {

// Runs one CLI invocation (args exclude the program name) and writes JSON
// to `out`. Commands read from `in` when no -i path is given. Exit
// status: 0 success/pass, 1 fail verdict, 2 usage or parse error, 3
// degeneracy error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace volrig::cli

#endif
