#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dieselop/data/normalize.hpp"
#include "dieselop/data/signal_train.hpp"

namespace dieselop::data {

/// A prepared corpus: time-ordered signal trains partitioned into a training
/// set and a contiguous test span, with normalization statistics fitted on
/// the training set only.
struct Dataset {
  std::vector<SignalTrain> train_set;
  std::vector<SignalTrain> test_set;
  NormStats stats;
  double test_start = 0.0;
  double test_end = 0.0;
  std::uint64_t cycle_seed = 0;
};

/// windowize + split + fit_normalize in one step. If `min_mean_ne` is
/// positive, rejects idle-heavy test spans whose mean engine speed falls
/// below it.
Dataset build_dataset(const engine::Trajectory& traj, double test_start, double test_end,
                      int stride = kWindow, double min_mean_ne = 0.0,
                      std::uint64_t cycle_seed = 0);

/// Directory layout: meta.json (counts, span, seeds, norm stats, provenance)
/// and trains.csv (one row per train: t0, 40 input values, 5 IC values,
/// 70 target values), time-ordered across both sets.
void save_dataset(const Dataset& ds, const std::string& dir, const std::string& config_hash);
Dataset load_dataset(const std::string& dir);

}  // namespace dieselop::data
