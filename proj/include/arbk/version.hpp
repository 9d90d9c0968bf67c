#pragma once

namespace arbk {

inline constexpr const char* kVersion = "0.1.0";

} // namespace arbk
