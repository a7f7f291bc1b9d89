#pragma once

namespace specwl {

inline constexpr const char* kVersion = "0.1.0";

} // namespace specwl
