#pragma once

namespace hypertrees {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hypertrees
