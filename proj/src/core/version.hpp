#pragma once

namespace edtn {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace edtn
