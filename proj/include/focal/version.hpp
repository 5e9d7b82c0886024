#pragma once

namespace focal {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace focal
