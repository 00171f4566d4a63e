#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace supercat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
/// Returns 0 on success, 1 when a verified identity fails, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace supercat::cli
