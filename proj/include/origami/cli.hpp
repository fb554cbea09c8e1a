#pragma once
//
// Command-line front end (build / analyze / verify-tnc / search-l / orbit).
// execute() is the whole program minus process boundaries, so tests can drive
// it directly.  Exit codes: 0 success or positive verdict, 2 negative verdict
// (invalid certificate, failed surjectivity, vacuous search), 1 usage or
// runtime error.
//
#include <iosfwd>
#include <string>
#include <vector>

namespace origami::cli {

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace origami::cli
