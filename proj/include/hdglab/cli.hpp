#pragma once

#include <iosfwd>

namespace hdglab {

/// Entry point of the hdglab command. Exit codes: 0 success, 1 numerical
/// failure (local singularity, root not found, unisolvency violation),
/// 2 usage error.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace hdglab
