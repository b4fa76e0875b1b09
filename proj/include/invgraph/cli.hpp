#pragma once

#include <iosfwd>

namespace invgraph::cli {

// Entry point behind the invgraph binary. Returns 0 on success, 1 on
// domain errors (singular matrix, not signable, ...), 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace invgraph::cli
