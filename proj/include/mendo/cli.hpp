#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mendo::cli {

/*
 * Runs one mendo invocation; args excludes the program name.  JSON results
 * go to out, diagnostics to err.  Exit codes: 0 success, 1 negative verdict,
 * 2 usage, input or resource errors.
 */
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mendo::cli
