#pragma once

#include <iosfwd>

namespace steiner4::cli {

/// Exit codes: 0 success, 1 verification or classification mismatch, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace steiner4::cli
