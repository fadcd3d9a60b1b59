// `venus` command line: render-state, run-circuit, serve.
//
// Exit codes: 0 success, 2 parse/validation error, 3 output not writable.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace venus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitUnwritable = 3;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace venus::cli
