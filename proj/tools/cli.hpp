#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csmd::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kRuntimeFailure = 1;
inline constexpr int kUsageError = 2;

/// Entry point for the `csmd` tool: analyze | run | gen.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace csmd::cli
