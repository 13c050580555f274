#pragma once

namespace so5::cli {

/// Entry point of the `so5` command-line tool.  argv follows main()
/// conventions.  Returns the process exit code: 0 on success, 1 when a
/// computed property check fails (drift bound exceeded, verification suite
/// failure, expectation mismatch), 2 on configuration or validation errors.
int run(int argc, const char* const* argv);

}  // namespace so5::cli
