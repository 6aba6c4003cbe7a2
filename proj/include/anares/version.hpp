#pragma once

namespace anares {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace anares
