#pragma once

namespace decmon {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace decmon
