#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcoalg {

// Runs one command line (without the program name). Exit status: 0 on
// success, 1 on a domain error (message names the failing module), 2 on a
// parse or usage error (message carries line and column when known).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qcoalg
