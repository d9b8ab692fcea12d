#pragma once

#include <string_view>

namespace dieselop {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Bumped whenever the checkpoint JSON layout changes incompatibly.
inline constexpr int kCheckpointFormatVersion = 1;

}  // namespace dieselop
