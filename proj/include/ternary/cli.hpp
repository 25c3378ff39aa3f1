#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace ternary {

/// Process-level facts the command line depends on, injectable for tests.
struct CliEnv {
  bool stdout_is_tty = false;
  bool stderr_is_tty = false;
  std::optional<std::string> out_dir;  // from TERNARY_CODES_OUT_DIR
  static CliEnv from_process();
};

/// Runs one command. Exit codes: 0 pass or optimal, 1 definite negative,
/// 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const CliEnv& env);

}  // namespace ternary
