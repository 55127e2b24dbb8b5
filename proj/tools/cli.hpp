#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace warpdeg::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kCheckFailed = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace warpdeg::cli
