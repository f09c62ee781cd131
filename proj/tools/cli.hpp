#pragma once

#include <iosfwd>

namespace cvxtop {

/// Exit codes: 0 ok / holds / not-applicable, 1 fails, 2 input error,
/// 3 node budget exhausted.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cvxtop
