#include "dieselop/data/signal_train.hpp"

#include <cmath>

#include "dieselop/errors.hpp"
#include "dieselop/io/csv.hpp"

namespace dieselop::data {

void extract_ics(SignalTrain& train) {
  train.ic_state = {train.targets[0][0], train.targets[1][0], train.targets[4][0]};
  train.ic_egr = train.targets[5][0];
  train.ic_vgt = train.targets[6][0];
}

std::vector<SignalTrain> windowize(const engine::Trajectory& traj, int stride) {
  if (stride < 1) throw ConfigError("windowize", "stride must be >= 1");
  if (traj.size() < static_cast<std::size_t>(kWindow)) {
    throw DataError("empty_dataset",
                    "trajectory too short to windowize (need at least 10 samples)");
  }
  std::vector<SignalTrain> trains;
  for (std::size_t start = 0; start + kWindow <= traj.size();
       start += static_cast<std::size_t>(stride)) {
    SignalTrain tr;
    tr.t0 = traj.t[start];
    for (int j = 0; j < kWindow; ++j) {
      const auto& u = traj.inputs[start + j];
      tr.window[0][j] = u.n_e;
      tr.window[1][j] = u.u_delta;
      tr.window[2][j] = u.u_egr;
      tr.window[3][j] = u.u_vgt;
      for (int s = 0; s < kNumStates; ++s) tr.targets[s][j] = traj.output(s, start + j);
    }
    extract_ics(tr);
    trains.push_back(tr);
  }
  return trains;
}

std::pair<std::vector<SignalTrain>, std::vector<SignalTrain>> split(
    const std::vector<SignalTrain>& trains, double t_start, double t_end) {
  if (!(t_end > t_start)) throw ConfigError("split", "test span must be non-empty");
  if (!trains.empty()) {
    const double base = trains.front().t0;
    const auto aligned = [&](double t) {
      const double r = std::fmod(t - base, kTrainSpan);
      return std::abs(r) < 1.0e-9 || std::abs(r - kTrainSpan) < 1.0e-9;
    };
    if (!aligned(t_start) || !aligned(t_end)) {
      throw ConfigError("split", "test span must be aligned to window boundaries");
    }
  }
  std::vector<SignalTrain> train_set, test_set;
  for (const auto& tr : trains) {
    if (tr.t0 >= t_start && tr.t0 < t_end) {
      test_set.push_back(tr);
    } else {
      train_set.push_back(tr);
    }
  }
  if (train_set.empty()) {
    throw DataError("empty_training", "test span swallows the entire dataset");
  }
  return {std::move(train_set), std::move(test_set)};
}

}  // namespace dieselop::data
