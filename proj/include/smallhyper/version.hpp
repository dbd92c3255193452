#pragma once

namespace smallhyper {

inline constexpr const char* kToolName = "smallhyper";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace smallhyper
