#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psibound::cli {

/// Environment variable holding the default precision in digits.
inline constexpr const char* kPrecisionEnv = "PSIBOUND_PREC";

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 certification or containment failure, 2 usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psibound::cli
