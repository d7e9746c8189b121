#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hitp {

// Exit codes: 0 ok / verified-in-range, 1 usage or recheck failure,
// 10 refuted-with-certificate, 20 undetermined / budget exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitRefuted = 10;
inline constexpr int kExitUndetermined = 20;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hitp
