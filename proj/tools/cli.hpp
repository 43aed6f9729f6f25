#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace negbeta::cli {

enum ExitCode { ok = 0, domain = 2, undecidable = 3, inconclusive = 4 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace negbeta::cli
