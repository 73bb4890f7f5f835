#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flaglab::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailure = 1;  // computational failure; a JSON {"error": ...} body is written to out
constexpr int kUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flaglab::cli
