#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qkflag {

// args excludes the program name. Returns 0 on success, 1 when a check or comparison
// reports failures, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qkflag
