#pragma once

namespace dicke {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace dicke
