#pragma once

namespace skewbox {

inline constexpr const char* version = "0.1.0";

}  // namespace skewbox
