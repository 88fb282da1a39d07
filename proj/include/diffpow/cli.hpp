#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace diffpow::cli {

/// Runs the command-line front end on the given arguments (program name
/// excluded). Exit status: 0 on success, 1 on usage or syntax errors,
/// 2 when the input is well-formed but mathematically outside an
/// operation's hypotheses.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diffpow::cli
