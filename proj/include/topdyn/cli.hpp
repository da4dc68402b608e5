#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace topdyn::cli {

/// Runs one command. Exit status: 0 success/verified, 1 violation or
/// counterexample found (witness in the report), 2 invalid input, 3 bound
/// exhausted (unknown verdicts present).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace topdyn::cli
