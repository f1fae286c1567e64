#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symgeo::cli {

/* Dispatch one command line (without the program name).  Returns the
 * process exit code: 0 success, 2 bad usage or bad input, 3 violated
 * library invariant. */
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace symgeo::cli
