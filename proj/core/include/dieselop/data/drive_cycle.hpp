#pragma once

#include <cstdint>
#include <vector>

#include "dieselop/engine/params.hpp"

namespace dieselop::data {

/// Synthetic drive-cycle settings. Bounds default to a mid-load envelope
/// narrower than the hard input invariants so the cycle avoids idle-heavy
/// and overspeed corners.
struct DriveCycleConfig {
  double duration_s = 7200.0;
  std::uint64_t seed = 42;
  engine::InputBounds bounds{{700.0, 2100.0},
                             {10.0, 220.0},
                             {0.0, 80.0},
                             {20.0, 90.0}};
  double dwell_min_s = 5.0;
  double dwell_max_s = 60.0;
  double smoother_tau_s = 2.0;
};

/// Piecewise-constant random set-points (uniform dwell and level) passed
/// through a per-channel first-order smoother, sampled at 2 Hz.
/// Deterministic in the seed; all values stay within the declared bounds.
std::vector<engine::EngineInputs> generate_drive_cycle(const DriveCycleConfig& cfg);

}  // namespace dieselop::data
