#pragma once

namespace ekr {

inline constexpr const char* kVersion = "0.1.0";

} // namespace ekr
