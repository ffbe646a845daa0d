#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace omegalie::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one command line (args excludes the program name). Documents go to
/// `out` (or --out), diagnostics to `err`. Returns 0 on PASS or a successful
/// construction, 1 when an emitted report is FAIL, 2 when no report could be
/// produced (usage, parse or input errors).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omegalie::cli
