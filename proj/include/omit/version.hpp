#pragma once

namespace omit {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kToolName = "omitdrag";

}  // namespace omit
