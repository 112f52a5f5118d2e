#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rootchi::tools {

enum ExitCode { ok = 0, check_failed = 1, invalid_input = 2, resource_limit = 3, io_error = 4 };

// Runs the command line args (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// Bundled corpus location baked in at build time.
std::string default_corpus_path();

}  // namespace rootchi::tools
