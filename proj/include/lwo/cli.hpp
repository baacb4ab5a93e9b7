#ifndef LWO_CLI_HPP
#define LWO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lwo::cli {

/// Runs one command line (without the program name). Returns 0 for success
/// or a true answer, 1 for a false answer and 2 for any error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lwo::cli

#endif  // LWO_CLI_HPP
