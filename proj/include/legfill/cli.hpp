#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace legfill {

// Runs the command-line tool on the given arguments (without argv[0]).
// Output goes to `out` (or the file named by --out), diagnostics to `err`.
// Returns the process exit code: 0 on success, 1 when a verification or
// computation fails, 2 on usage errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace legfill
