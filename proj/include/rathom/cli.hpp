#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rathom::cli {

/// Version of the machine-readable output document ("schema" key).
inline constexpr int kMachineSchemaVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation.  `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rathom::cli
