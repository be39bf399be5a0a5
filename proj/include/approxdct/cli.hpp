#ifndef APPROXDCT_CLI_HPP
#define APPROXDCT_CLI_HPP

#include <string>
#include <vector>

namespace approxdct {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kCorpusEnvVar = "APPROXDCT_CORPUS";

/// Runs one CLI invocation (args exclude argv[0]); returns the process exit code.
int run_cli(const std::vector<std::string>& args);

}  // namespace approxdct

#endif
