#pragma once

namespace gpswarm {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gpswarm
