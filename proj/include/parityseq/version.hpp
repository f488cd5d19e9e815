#pragma once

#include <string_view>

namespace parityseq {

inline constexpr std::string_view kToolName = "parityseq";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace parityseq
