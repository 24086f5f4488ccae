#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace powersum::cli {

inline constexpr const char* kVersion = "powersum 0.1.0";

// Executes one command; line-delimited JSON records on `out`, diagnostics
// on `err`. Exit status: 0 all records pass, 1 mathematical failure,
// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powersum::cli
