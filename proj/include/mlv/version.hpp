#pragma once

#include <string_view>

namespace mlv {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace mlv
