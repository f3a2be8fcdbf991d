#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace synorder::cli {

// Runs one subcommand. Exit status 0 means yes or success, 1 means no,
// 2 means error (a one-line diagnostic goes to err).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace synorder::cli
