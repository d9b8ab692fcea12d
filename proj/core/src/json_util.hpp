#pragma once

// Internal helpers shared by dataset/checkpoint/config serialization.
// Not installed; vendor nlohmann/json stays a private dependency.

#include <fstream>
#include <string>

#include <json.hpp>

#include "dieselop/data/normalize.hpp"
#include "dieselop/errors.hpp"

namespace dieselop {

using Json = nlohmann::ordered_json;

inline Json read_json_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw IoError("file_open", std::string("cannot open ") + what + " '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw DataError("json_parse",
                    std::string("malformed ") + what + " '" + path + "': " + e.what());
  }
  return j;
}

inline void write_json_file(const Json& j, const std::string& path, const char* what) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("file_open", std::string("cannot open ") + what + " '" + path + "'");
  out << j.dump(2) << "\n";
  out.flush();
  if (!out) throw IoError("file_write", std::string("write failure on ") + what + " '" + path + "'");
}

inline Json channel_stats_to_json(const data::ChannelStats& c) {
  return Json{{"mean", c.mean}, {"std", c.std}, {"guarded", c.guarded}};
}

inline data::ChannelStats channel_stats_from_json(const Json& j) {
  data::ChannelStats c;
  c.mean = j.at("mean").get<double>();
  c.std = j.at("std").get<double>();
  c.guarded = j.at("guarded").get<bool>();
  return c;
}

inline Json norm_stats_to_json(const data::NormStats& s) {
  Json j;
  for (const auto& c : s.inputs) j["inputs"].push_back(channel_stats_to_json(c));
  for (const auto& c : s.ics) j["ics"].push_back(channel_stats_to_json(c));
  for (const auto& c : s.outputs) j["outputs"].push_back(channel_stats_to_json(c));
  return j;
}

inline data::NormStats norm_stats_from_json(const Json& j) {
  data::NormStats s;
  const auto load = [](const Json& arr, auto& dst, const char* what) {
    if (!arr.is_array() || arr.size() != dst.size()) {
      throw DataError("norm_stats", std::string("bad norm-stats block '") + what + "'");
    }
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = channel_stats_from_json(arr[i]);
  };
  load(j.at("inputs"), s.inputs, "inputs");
  load(j.at("ics"), s.ics, "ics");
  load(j.at("outputs"), s.outputs, "outputs");
  return s;
}

}  // namespace dieselop
