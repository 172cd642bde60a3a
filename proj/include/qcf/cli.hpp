#pragma once

#include <iosfwd>

namespace qcf {

/// Exit codes: 0 success, 1 a reproduced claim failed, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcf
