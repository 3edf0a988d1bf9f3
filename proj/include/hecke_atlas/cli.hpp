#pragma once

#include <iosfwd>

namespace hecke_atlas::cli {

/// Exit codes: 0 all pass, 1 failures (or flagged without --allow-flagged),
/// 2 input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hecke_atlas::cli
