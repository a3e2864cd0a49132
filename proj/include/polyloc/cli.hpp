#ifndef POLYLOC_CLI_HPP
#define POLYLOC_CLI_HPP

#include <iosfwd>

namespace polyloc {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitNumeric = 3,
  kExitIo = 4,
};

/// Entry point of the `polyloc` tool; signals are read from `in` when no
/// file is given and results go to `out` unless --out names a file.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace polyloc

#endif // POLYLOC_CLI_HPP
