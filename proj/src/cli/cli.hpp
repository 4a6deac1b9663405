#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lplanar::cli {

// Exit codes: 0 accept / success, 1 reject, 2 input or usage error.
inline constexpr int kAccept = 0;
inline constexpr int kReject = 1;
inline constexpr int kInputError = 2;

// args excludes the program name. stdin is read for the path "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lplanar::cli
