// cli.hpp : batch command-line front end

#ifndef SUBCAT_CLI_HPP
#define SUBCAT_CLI_HPP

#include <string>
#include <vector>

namespace subcat {

// Runs one subcommand (extract-treebank, extract-raw, ambiguity-stats,
// filter, compare, report). Returns 0 on success, 1 on usage errors, 2 on
// data errors; outputs are written atomically. SUBCAT_WORKERS in the
// environment sets the worker count (default 1); identical inputs give
// byte-identical outputs at any worker count.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);  // args without the program name

}  // namespace subcat

#endif  // SUBCAT_CLI_HPP
