#ifndef EXLAB_CLI_HPP
#define EXLAB_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace exlab {

// Runs the command-line tool. args excludes the program name.
// Exit codes: 0 success, 1 usage error, 2 budget exceeded, 3 internal
// verification failure.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace exlab

#endif
