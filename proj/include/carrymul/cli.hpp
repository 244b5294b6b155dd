#pragma once

#include <ostream>
#include <span>
#include <string>

#include "carrymul/oracle.hpp"

namespace carrymul::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

/// kExitOk for a clean report, kExitMismatch otherwise.
int verify_exit_code(const VerifyReport& report) noexcept;

/// Entry point behind the `carrymul` binary. `args` excludes the program
/// name. Payload goes to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace carrymul::cli
