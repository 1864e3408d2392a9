#pragma once

namespace moireq {

/// Entry point of the command-line tool. Returns the process exit code:
/// 0 success, 1 usage or configuration error, 2 runtime failure.
int run_cli(int argc, char** argv);

}  // namespace moireq
