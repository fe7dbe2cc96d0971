#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kucalc {

/// Exit codes: 0 success, 1 usage or internal error, 2 verification
/// failure, 3 indeterminate-only deviations (conjecture).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kucalc
