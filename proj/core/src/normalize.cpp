#include "dieselop/data/normalize.hpp"

#include <cmath>

#include "dieselop/errors.hpp"

namespace dieselop::data {

namespace {

constexpr double kStdFloor = 1.0e-8;

ChannelStats stats_of(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  double std = std::sqrt(ss / static_cast<double>(values.size()));
  ChannelStats c;
  c.mean = mean;
  if (std < kStdFloor) {
    std = kStdFloor;
    c.guarded = true;
  }
  c.std = std;
  return c;
}

const char* kInputNames[kNumInputs] = {"n_e", "u_delta", "u_egr", "u_vgt"};
const char* kIcNames[kNumIc] = {"ic_P_im", "ic_P_em", "ic_omega_t", "ic_u_egr", "ic_u_vgt"};

}  // namespace

std::vector<std::string> NormStats::guarded_channels() const {
  std::vector<std::string> names;
  for (int c = 0; c < kNumInputs; ++c) {
    if (inputs[c].guarded) names.emplace_back(kInputNames[c]);
  }
  for (int c = 0; c < kNumIc; ++c) {
    if (ics[c].guarded) names.emplace_back(kIcNames[c]);
  }
  for (int s = 0; s < kNumStates; ++s) {
    if (outputs[s].guarded) names.emplace_back(engine::Trajectory::state_name(s));
  }
  return names;
}

NormStats fit_normalize(const std::vector<SignalTrain>& train_set) {
  if (train_set.empty()) {
    throw DataError("empty_dataset", "cannot fit normalization on an empty training set");
  }
  NormStats stats;
  std::vector<double> buf;
  buf.reserve(train_set.size() * kWindow);

  for (int c = 0; c < kNumInputs; ++c) {
    buf.clear();
    for (const auto& tr : train_set) {
      for (int j = 0; j < kWindow; ++j) buf.push_back(tr.window[c][j]);
    }
    stats.inputs[c] = stats_of(buf);
  }
  for (int c = 0; c < kNumIc; ++c) {
    buf.clear();
    for (const auto& tr : train_set) buf.push_back(tr.ic_all()[c]);
    stats.ics[c] = stats_of(buf);
  }
  for (int s = 0; s < kNumStates; ++s) {
    buf.clear();
    for (const auto& tr : train_set) {
      for (int j = 0; j < kWindow; ++j) buf.push_back(tr.targets[s][j]);
    }
    stats.outputs[s] = stats_of(buf);
  }
  return stats;
}

}  // namespace dieselop::data
