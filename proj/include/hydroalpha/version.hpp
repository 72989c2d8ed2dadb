#pragma once

namespace hydroalpha {
inline constexpr const char* kVersion = "0.1.0";
}
