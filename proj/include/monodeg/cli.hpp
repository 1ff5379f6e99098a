#pragma once

#include <iosfwd>

namespace monodeg {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInput = 2,
  kExitInconsistent = 3,
  kExitUnresolved = 4,
};

/// The whole `monodeg` tool: analyze | sequence | recurrence | verdict | cells.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monodeg
