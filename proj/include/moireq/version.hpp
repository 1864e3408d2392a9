#pragma once

namespace moireq {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace moireq
