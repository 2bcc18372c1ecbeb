#pragma once

#include <iosfwd>

namespace codetuple::cli {

/// Exit statuses: 0 success, 1 negative verdict, 2 input error, 3 internal
/// invariant violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace codetuple::cli
