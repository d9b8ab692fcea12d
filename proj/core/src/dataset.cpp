#include "dieselop/data/dataset.hpp"

#include <algorithm>
#include <filesystem>

#include "dieselop/io/csv.hpp"
#include "dieselop/version.hpp"
#include "json_util.hpp"

namespace dieselop::data {

namespace fs = std::filesystem;

Dataset build_dataset(const engine::Trajectory& traj, double test_start, double test_end,
                      int stride, double min_mean_ne, std::uint64_t cycle_seed) {
  Dataset ds;
  auto trains = windowize(traj, stride);
  auto [train_set, test_set] = split(trains, test_start, test_end);
  if (min_mean_ne > 0.0 && !test_set.empty()) {
    double sum = 0.0;
    for (const auto& tr : test_set) {
      for (int j = 0; j < kWindow; ++j) sum += tr.window[0][j];
    }
    const double mean_ne = sum / static_cast<double>(test_set.size() * kWindow);
    if (mean_ne < min_mean_ne) {
      throw DataError("idle_test_span",
                      "test span is idle-heavy: mean n_e " + io::format_sig9(mean_ne) +
                          " rpm below required " + io::format_sig9(min_mean_ne));
    }
  }
  ds.stats = fit_normalize(train_set);
  ds.train_set = std::move(train_set);
  ds.test_set = std::move(test_set);
  ds.test_start = test_start;
  ds.test_end = test_end;
  ds.cycle_seed = cycle_seed;
  return ds;
}

namespace {

std::vector<std::string> trains_header() {
  std::vector<std::string> h{"t0"};
  const char* in_names[kNumInputs] = {"n_e", "u_delta", "u_egr", "u_vgt"};
  for (int c = 0; c < kNumInputs; ++c) {
    for (int j = 0; j < kWindow; ++j) {
      h.push_back(std::string("in_") + in_names[c] + "_" + std::to_string(j));
    }
  }
  const char* ic_names[kNumIc] = {"P_im", "P_em", "omega_t", "u_egr", "u_vgt"};
  for (int c = 0; c < kNumIc; ++c) h.push_back(std::string("ic_") + ic_names[c]);
  for (int s = 0; s < kNumStates; ++s) {
    for (int j = 0; j < kWindow; ++j) {
      h.push_back(std::string("tgt_") + engine::Trajectory::state_name(s) + "_" +
                  std::to_string(j));
    }
  }
  return h;
}

void write_train_row(io::CsvWriter& w, const SignalTrain& tr) {
  std::vector<std::string> cells;
  cells.reserve(1 + kNumInputs * kWindow + kNumIc + kNumStates * kWindow);
  cells.push_back(io::format_exact(tr.t0));
  for (int c = 0; c < kNumInputs; ++c) {
    for (int j = 0; j < kWindow; ++j) cells.push_back(io::format_exact(tr.window[c][j]));
  }
  for (double v : tr.ic_all()) cells.push_back(io::format_exact(v));
  for (int s = 0; s < kNumStates; ++s) {
    for (int j = 0; j < kWindow; ++j) cells.push_back(io::format_exact(tr.targets[s][j]));
  }
  w.row(cells);
}

SignalTrain parse_train_row(const std::vector<std::string>& row) {
  constexpr std::size_t kExpected = 1 + kNumInputs * kWindow + kNumIc + kNumStates * kWindow;
  if (row.size() != kExpected) {
    throw DataError("dataset_row", "malformed trains.csv row");
  }
  SignalTrain tr;
  std::size_t i = 0;
  tr.t0 = io::parse_double(row[i++]);
  for (int c = 0; c < kNumInputs; ++c) {
    for (int j = 0; j < kWindow; ++j) tr.window[c][j] = io::parse_double(row[i++]);
  }
  tr.ic_state[0] = io::parse_double(row[i++]);
  tr.ic_state[1] = io::parse_double(row[i++]);
  tr.ic_state[2] = io::parse_double(row[i++]);
  tr.ic_egr = io::parse_double(row[i++]);
  tr.ic_vgt = io::parse_double(row[i++]);
  for (int s = 0; s < kNumStates; ++s) {
    for (int j = 0; j < kWindow; ++j) tr.targets[s][j] = io::parse_double(row[i++]);
  }
  return tr;
}

}  // namespace

void save_dataset(const Dataset& ds, const std::string& dir, const std::string& config_hash) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("mkdir", "cannot create dataset directory '" + dir + "'");

  Json meta;
  meta["format_version"] = 1;
  meta["tool_version"] = std::string(kToolVersion);
  meta["config_hash"] = config_hash;
  meta["counts"] = Json{{"train", ds.train_set.size()}, {"test", ds.test_set.size()}};
  meta["test_span"] = Json::array({ds.test_start, ds.test_end});
  meta["seeds"] = Json{{"drive_cycle", ds.cycle_seed}};
  meta["norm_stats"] = norm_stats_to_json(ds.stats);
  meta["guarded_channels"] = ds.stats.guarded_channels();
  write_json_file(meta, (fs::path(dir) / "meta.json").string(), "dataset meta");

  // one time-ordered file; membership is recovered from the span
  std::vector<const SignalTrain*> ordered;
  ordered.reserve(ds.train_set.size() + ds.test_set.size());
  for (const auto& tr : ds.train_set) ordered.push_back(&tr);
  for (const auto& tr : ds.test_set) ordered.push_back(&tr);
  std::sort(ordered.begin(), ordered.end(),
            [](const SignalTrain* a, const SignalTrain* b) { return a->t0 < b->t0; });

  io::CsvWriter w((fs::path(dir) / "trains.csv").string());
  w.comment("config_hash=" + config_hash + " tool_version=" + std::string(kToolVersion));
  w.row(trains_header());
  for (const auto* tr : ordered) write_train_row(w, *tr);
  w.close();
}

Dataset load_dataset(const std::string& dir) {
  const fs::path meta_path = fs::path(dir) / "meta.json";
  if (!fs::exists(meta_path)) {
    throw DataError("missing_dataset", "no dataset at '" + dir + "' (meta.json not found)");
  }
  const Json meta = read_json_file(meta_path.string(), "dataset meta");
  Dataset ds;
  try {
    ds.test_start = meta.at("test_span").at(0).get<double>();
    ds.test_end = meta.at("test_span").at(1).get<double>();
    ds.cycle_seed = meta.at("seeds").at("drive_cycle").get<std::uint64_t>();
    ds.stats = norm_stats_from_json(meta.at("norm_stats"));
  } catch (const Json::exception& e) {
    throw DataError("dataset_meta", std::string("bad meta.json: ") + e.what());
  }

  const io::CsvFile f = io::CsvFile::read((fs::path(dir) / "trains.csv").string());
  if (f.header() != trains_header()) {
    throw DataError("dataset_header", "unexpected trains.csv header in '" + dir + "'");
  }
  for (const auto& row : f.rows()) {
    SignalTrain tr = parse_train_row(row);
    if (tr.t0 >= ds.test_start && tr.t0 < ds.test_end) {
      ds.test_set.push_back(tr);
    } else {
      ds.train_set.push_back(tr);
    }
  }
  const auto want_train = meta.at("counts").at("train").get<std::size_t>();
  const auto want_test = meta.at("counts").at("test").get<std::size_t>();
  if (ds.train_set.size() != want_train || ds.test_set.size() != want_test) {
    throw DataError("dataset_counts", "trains.csv does not match meta.json counts");
  }
  return ds;
}

}  // namespace dieselop::data
