#include "dieselop/data/noise.hpp"

#include "dieselop/errors.hpp"
#include "dieselop/rng.hpp"

namespace dieselop::data {

std::vector<SignalTrain> add_awgn(const std::vector<SignalTrain>& trains,
                                  const NoiseSpec& spec, const NormStats& stats) {
  if (spec.level_pct < 0.0) {
    throw ConfigError("noise", "noise level must be non-negative");
  }
  if (spec.level_pct == 0.0) return trains;

  std::vector<SignalTrain> noisy = trains;
  const double scale = spec.level_pct / 100.0;
  RngStream root(spec.seed);

  if (spec.target == NoiseTarget::inputs) {
    for (int c = 0; c < kNumInputs; ++c) {
      const double sigma = scale * stats.inputs[c].std;
      RngStream channel = root.fork(static_cast<std::uint64_t>(c));
      for (std::size_t i = 0; i < noisy.size(); ++i) {
        RngStream s = channel.fork(i);
        for (int j = 0; j < kWindow; ++j) noisy[i].window[c][j] += sigma * s.gaussian();
      }
    }
  } else {
    for (int st = 0; st < kNumStates; ++st) {
      const double sigma = scale * stats.outputs[st].std;
      RngStream channel = root.fork(100 + static_cast<std::uint64_t>(st));
      for (std::size_t i = 0; i < noisy.size(); ++i) {
        RngStream s = channel.fork(i);
        for (int j = 0; j < kWindow; ++j) noisy[i].targets[st][j] += sigma * s.gaussian();
      }
    }
    // ICs are extracted from the output field, so noisy labels imply noisy ICs
    for (auto& tr : noisy) extract_ics(tr);
  }
  return noisy;
}

}  // namespace dieselop::data
