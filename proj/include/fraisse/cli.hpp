#pragma once

#include <iosfwd>

namespace fraisse::cli {

/// Entry point shared by the binary and the tests. Exit codes: 0 success or
/// verified, 1 counterexample found (a witness file is written), 2 usage or
/// input error. Identical argv and inputs produce byte-identical output.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fraisse::cli
