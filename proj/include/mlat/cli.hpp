#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mlat {

// Command driver. `args` excludes the program name. Human-readable output
// goes to `out`, diagnostics and timing to `err`; `--out <file>` writes the
// structured report. Returns the process exit code: 0 success or pass,
// 1 negative result or suite failure, 2 usage or input error, 3 budget
// exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mlat
