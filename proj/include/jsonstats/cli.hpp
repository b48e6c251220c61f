#ifndef JSONSTATS_CLI_HPP
#define JSONSTATS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace jsonstats::cli {

enum ExitCode : int { success = 0, failure = 1, usage_error = 2 };

/// Runs the json-taxonomy command. `args` includes the program name.
///
///   json-taxonomy [--report | --acronym] <path | ->
///
/// Default output is one qualifier per line followed by the acronym (or
/// the structural marker). Parse errors go to `err` as path:line:column.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace jsonstats::cli

#endif
