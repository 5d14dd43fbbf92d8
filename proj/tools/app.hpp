#pragma once

#include <string>
#include <vector>

namespace grlie::cli {

/// Entry point of the grlie tool. Exit codes: 0 success / verified,
/// 1 verification defect, 2 usage or parse error.
int run(int argc, const char* const* argv);

/// Same, for in-process callers; args exclude the program name.
int run(const std::vector<std::string>& args);

}  // namespace grlie::cli
