#pragma once

namespace qift {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace qift
