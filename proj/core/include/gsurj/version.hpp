#pragma once

#include <string_view>

namespace gsurj {

inline constexpr std::string_view kVersion = "0.1.0";

}
