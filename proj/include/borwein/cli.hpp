#pragma once

// Command line: verify, lvalue, kdf, qexp.
// Exit codes: 0 success, 1 failed check or rejected evaluation, 2 usage error.

#include <iosfwd>

namespace borwein::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace borwein::cli
