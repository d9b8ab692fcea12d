#pragma once

#include <cstdint>
#include <vector>

#include "dieselop/data/normalize.hpp"
#include "dieselop/data/signal_train.hpp"

namespace dieselop::data {

enum class NoiseTarget { inputs, outputs };

struct NoiseSpec {
  double level_pct = 0.0;  ///< noise std as a percentage of the channel's training std
  NoiseTarget target = NoiseTarget::inputs;
  std::uint64_t seed = 0;
};

/// Adds zero-mean white Gaussian noise with sigma = level_pct/100 * channel
/// training std. Streams are split per (channel, train index) so channels are
/// uncorrelated and the result is deterministic in the seed.
///
/// target == inputs: perturbs the four window channels, ICs untouched.
/// target == outputs: perturbs the 7x10 targets, then re-extracts the IC
/// fields from the noisy targets (ICs are defined as the first output point).
/// level_pct == 0 returns the input bitwise.
std::vector<SignalTrain> add_awgn(const std::vector<SignalTrain>& trains,
                                  const NoiseSpec& spec, const NormStats& stats);

}  // namespace dieselop::data
