#pragma once

namespace bulab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bulab
