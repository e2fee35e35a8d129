#pragma once

namespace ph {

inline constexpr const char* kToolName = "prime-hoelder";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace ph
