#pragma once

namespace frontier {

/// Entry point for the `frontier` command-line tool. Exit codes:
/// 0 success, 1 data/domain failure, 2 usage failure.
int cli_main(int argc, const char* const* argv);

} // namespace frontier
