#pragma once

#include <string>
#include <vector>

namespace bundles {

/// Runs the sbundle command line. Exit status contract: 0 success, 1 domain
/// result (for example "no bundle between the requested pair"), 2 usage or
/// schema errors.
int run_cli(int argc, const char* const* argv);

/// Convenience overload for tests.
int run_cli(const std::vector<std::string>& args);

}  // namespace bundles
