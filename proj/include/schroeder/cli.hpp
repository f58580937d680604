#pragma once

#include <iosfwd>

namespace schroeder {

/// Entry point behind the command-line tool. Exit codes: 0 success, 1 a
/// verification found failures, 2 invalid input. Data goes to `out`,
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schroeder
