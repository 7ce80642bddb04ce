#pragma once

namespace mslkit {

inline constexpr const char* kVersion = "0.1.0";

} // namespace mslkit
