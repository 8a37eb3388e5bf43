#pragma once

namespace myopia {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace myopia
