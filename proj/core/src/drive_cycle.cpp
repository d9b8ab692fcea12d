#include "dieselop/data/drive_cycle.hpp"

#include <cmath>

#include "dieselop/engine/model.hpp"
#include "dieselop/errors.hpp"
#include "dieselop/rng.hpp"

namespace dieselop::data {

namespace {

std::vector<double> channel_cycle(std::size_t n, const std::array<double, 2>& bounds,
                                  double dwell_min, double dwell_max, double tau,
                                  RngStream stream) {
  std::vector<double> setpoints(n);
  std::size_t i = 0;
  while (i < n) {
    const double dwell_s = stream.uniform(dwell_min, dwell_max);
    const auto dwell_samples =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(dwell_s / engine::kSamplePeriod)));
    const double level = stream.uniform(bounds[0], bounds[1]);
    for (std::size_t k = 0; k < dwell_samples && i < n; ++k, ++i) setpoints[i] = level;
  }

  // exact first-order smoother over the 0.5 s grid
  const double decay = std::exp(-engine::kSamplePeriod / tau);
  std::vector<double> out(n);
  double y = setpoints.empty() ? 0.0 : setpoints[0];
  for (std::size_t k = 0; k < n; ++k) {
    y = setpoints[k] + (y - setpoints[k]) * decay;
    out[k] = y;
  }
  return out;
}

}  // namespace

std::vector<engine::EngineInputs> generate_drive_cycle(const DriveCycleConfig& cfg) {
  if (cfg.duration_s < 10.0) {
    throw ConfigError("drive_cycle", "drive cycle duration must be at least 10 s");
  }
  if (!(cfg.dwell_min_s > 0.0) || cfg.dwell_max_s < cfg.dwell_min_s) {
    throw ConfigError("drive_cycle", "invalid dwell range");
  }
  if (!(cfg.smoother_tau_s > 0.0)) {
    throw ConfigError("drive_cycle", "smoother tau must be positive");
  }

  const auto n = static_cast<std::size_t>(std::llround(cfg.duration_s / engine::kSamplePeriod));
  RngStream root(cfg.seed);
  const auto ne = channel_cycle(n, cfg.bounds.n_e, cfg.dwell_min_s, cfg.dwell_max_s,
                                cfg.smoother_tau_s, root.fork(0));
  const auto ud = channel_cycle(n, cfg.bounds.u_delta, cfg.dwell_min_s, cfg.dwell_max_s,
                                cfg.smoother_tau_s, root.fork(1));
  const auto ue = channel_cycle(n, cfg.bounds.u_egr, cfg.dwell_min_s, cfg.dwell_max_s,
                                cfg.smoother_tau_s, root.fork(2));
  const auto uv = channel_cycle(n, cfg.bounds.u_vgt, cfg.dwell_min_s, cfg.dwell_max_s,
                                cfg.smoother_tau_s, root.fork(3));

  std::vector<engine::EngineInputs> cycle(n);
  for (std::size_t k = 0; k < n; ++k) {
    cycle[k] = engine::EngineInputs{ne[k], ud[k], ue[k], uv[k]};
  }
  return cycle;
}

}  // namespace dieselop::data
