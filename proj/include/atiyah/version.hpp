#pragma once

namespace atiyah {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace atiyah
