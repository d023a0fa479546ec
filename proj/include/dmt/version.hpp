#pragma once

#include <string_view>

namespace dmt {

inline constexpr std::string_view kToolName = "dmt";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace dmt
