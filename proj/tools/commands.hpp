#ifndef SUBGRAD_TOOLS_COMMANDS_HPP
#define SUBGRAD_TOOLS_COMMANDS_HPP

#include <string>

#include "config.hpp"
#include "subgrad/trace.hpp"

namespace subgrad::cli {

// Exit codes: 0 success, 1 verification failure, 2 configuration error,
// 3 runtime/oracle error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRuntimeError = 3;

int cmd_run(const RunConfig& config);
int cmd_dump_config(const RunConfig& config);
int cmd_verify(const std::string& suite, const std::string& report_path,
               std::uint64_t seed);
int cmd_certify(const std::string& problem_spec, const std::string& method,
                std::uint64_t budget, const std::string& out_path,
                std::uint64_t seed, double residual_target);

// Full argument parser + dispatcher; returns the process exit code.
int cli_main(int argc, const char* const* argv);

// Trace CSV writer (17 significant digits, LF endings). Exposed for tests.
void write_trace_csv(const std::string& path, const RunTrace& trace,
                     bool stochastic);

}  // namespace subgrad::cli

#endif  // SUBGRAD_TOOLS_COMMANDS_HPP
