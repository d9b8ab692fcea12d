#pragma once

#include <array>
#include <string>
#include <vector>

#include "dieselop/data/signal_train.hpp"

namespace dieselop::data {

struct ChannelStats {
  double mean = 0.0;
  double std = 1.0;
  bool guarded = false;  ///< true when the epsilon floor engaged (constant channel)
};

/// Per-channel z-score statistics, fitted on training data only and immutable
/// afterwards. Standard deviations are floored at 1e-8.
struct NormStats {
  std::array<ChannelStats, kNumInputs> inputs{};
  std::array<ChannelStats, kNumIc> ics{};
  std::array<ChannelStats, kNumStates> outputs{};

  /// Names of channels whose std hit the epsilon guard.
  std::vector<std::string> guarded_channels() const;

  static double apply(double v, const ChannelStats& c) { return (v - c.mean) / c.std; }
  static double invert(double v, const ChannelStats& c) { return c.mean + c.std * v; }
};

/// Fit z-score stats over a non-empty training set.
NormStats fit_normalize(const std::vector<SignalTrain>& train_set);

}  // namespace dieselop::data
