#pragma once

namespace gpreg {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "gpreg";
inline constexpr const char* kModelSchema = "gpreg-model/1";

}  // namespace gpreg
