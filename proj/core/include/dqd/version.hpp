#pragma once

#include <string_view>

namespace dqd {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::string_view kEngineName = "dqdcorr";

}  // namespace dqd
