#pragma once

#include <ostream>

namespace chow {

/// Entry point of chowctl. Exit codes: 0 success, 1 usage or input error,
/// 2 invalid matroid input or a failed verification.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chow
