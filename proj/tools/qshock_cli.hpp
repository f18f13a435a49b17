#pragma once

namespace qshock::cli {

/// Parse argv, dispatch the subcommand, write artifacts.
/// Returns 0 on success, 1 on usage errors, 2 on computational errors
/// (tagged error name on stderr).
int run_cli(int argc, const char* const* argv);

} // namespace qshock::cli
