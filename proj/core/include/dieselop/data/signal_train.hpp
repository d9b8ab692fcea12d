#pragma once

#include <array>
#include <utility>
#include <vector>

#include "dieselop/engine/model.hpp"

namespace dieselop::data {

inline constexpr int kWindow = 10;       ///< temporal points per signal train
inline constexpr int kNumInputs = 4;     ///< n_e, u_delta, u_egr, u_vgt
inline constexpr int kNumStates = engine::kNumOutputStates;
inline constexpr int kNumIc = 5;         ///< P_im, P_em, omega_t, u_egr_act, u_vgt_act
inline constexpr double kTrainSpan = kWindow * engine::kSamplePeriod;  // 5 s

/// One training/inference unit: a 10-point window of the four input
/// channels, the measurable-state initial conditions at the window's first
/// instant, and the 7x10 target outputs.
struct SignalTrain {
  double t0 = 0.0;
  std::array<std::array<double, kWindow>, kNumInputs> window{};
  std::array<double, 3> ic_state{};  ///< P_im, P_em, omega_t at the first instant
  double ic_egr = 0.0;               ///< u_egr_act at the first instant
  double ic_vgt = 0.0;               ///< u_vgt_act at the first instant
  std::array<std::array<double, kWindow>, kNumStates> targets{};

  /// The five measurable-state ICs in output order [P_im, P_em, omega_t, egr, vgt].
  std::array<double, kNumIc> ic_all() const {
    return {ic_state[0], ic_state[1], ic_state[2], ic_egr, ic_vgt};
  }
};

/// Re-derive the IC fields from the targets at index 0 (the extraction rule).
void extract_ics(SignalTrain& train);

/// Cuts a labeled trajectory into windows of 10 points with the given stride
/// (stride == kWindow means non-overlapping); the trailing remainder is
/// dropped. Throws DataError("empty_dataset") when fewer than 10 samples.
std::vector<SignalTrain> windowize(const engine::Trajectory& traj, int stride = kWindow);

/// Partition by window start time: trains with t0 in [t_start, t_end) form
/// the test set, order preserved. The span must be aligned to window
/// boundaries and must not swallow the whole dataset.
std::pair<std::vector<SignalTrain>, std::vector<SignalTrain>> split(
    const std::vector<SignalTrain>& trains, double t_start, double t_end);

}  // namespace dieselop::data
