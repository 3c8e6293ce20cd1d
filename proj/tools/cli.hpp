#pragma once

#include <iosfwd>

namespace ybh::cli {

// Exit codes: 0 success, 1 failed mathematical check, 2 input error, 3 internal error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ybh::cli
