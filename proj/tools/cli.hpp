#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridramsey::cli {

// Exit codes: 0 found/success, 1 well-formed negative result, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gridramsey::cli
