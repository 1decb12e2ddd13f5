#pragma once

namespace mnlck {

/** Library version, kept in sync with the CMake project version. */
inline constexpr const char* kVersion = "0.1.0";

}  // namespace mnlck
