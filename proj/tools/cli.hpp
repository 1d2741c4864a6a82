#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace bpd::cli {

// Exit codes: 0 yes / success, 1 no / verification failed, 2 error.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

// Copy of `report` with every "time_ms" key removed, recursively.
nlohmann::json without_timing(const nlohmann::json& report);

// Fills report_digest from everything except timing fields and the digest.
void seal(nlohmann::json& report);

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bpd::cli
