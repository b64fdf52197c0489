#ifndef TWOPOINT_CLI_HPP
#define TWOPOINT_CLI_HPP

#include <ostream>

namespace twopoint {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the twopoint tool: integrate, bounds, verify, sharpness,
/// convergence. Results go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twopoint

#endif  // TWOPOINT_CLI_HPP
