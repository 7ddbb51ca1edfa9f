#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace prox::cli {

/// Runs `prox <args...>`; args excludes the program name. Returns the
/// process exit code: 0 on success, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prox::cli
