#include "dieselop/engine/model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "dieselop/engine/flow.hpp"
#include "dieselop/engine/rk4.hpp"
#include "dieselop/errors.hpp"
#include "dieselop/io/csv.hpp"

namespace dieselop::engine {

namespace {

bool finite(double v) { return std::isfinite(v); }

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    throw ConfigError("engine_params", std::string("engine parameter '") + name +
                                           "' must be strictly positive");
  }
}

}  // namespace

void validate(const EngineParams& p) {
  require_positive(p.v_im, "v_im");
  require_positive(p.v_em, "v_em");
  require_positive(p.t_im, "t_im");
  require_positive(p.t_em_base, "t_em_base");
  require_positive(p.r_a, "r_a");
  require_positive(p.r_e, "r_e");
  require_positive(p.v_d, "v_d");
  require_positive(p.j_t, "j_t");
  require_positive(p.a_egr_max, "a_egr_max");
  require_positive(p.a_t_max, "a_t_max");
  require_positive(p.tau_egr1, "tau_egr1");
  require_positive(p.tau_egr2, "tau_egr2");
  require_positive(p.tau_vgt, "tau_vgt");
  require_positive(p.r_c, "r_c");
  require_positive(p.p_amb, "p_amb");
  require_positive(p.t_amb, "t_amb");
  require_positive(p.omega_min, "omega_min");
  require_positive(p.omega_ref, "omega_ref");
  if (p.n_cyl < 1) throw ConfigError("engine_params", "n_cyl must be >= 1");
  if (!(p.gamma_a > 1.0) || !(p.gamma_e > 1.0))
    throw ConfigError("engine_params", "heat-capacity ratios must exceed 1");
  if (p.k_egr < 1.0) throw ConfigError("engine_params", "k_egr must be >= 1");
  if (!(p.eta_vol > 0.0 && p.eta_vol <= 1.0))
    throw ConfigError("engine_params", "eta_vol must lie in (0, 1]");
  if (!(p.eta_m > 0.0 && p.eta_m <= 1.0))
    throw ConfigError("engine_params", "eta_m must lie in (0, 1]");
  if (!(p.eta_c > 0.0 && p.eta_c <= 1.0) || !(p.eta_t > 0.0 && p.eta_t <= 1.0))
    throw ConfigError("engine_params", "turbo efficiencies must lie in (0, 1]");
}

void validate(const EngineState& s, const EngineParams& p) {
  const auto fail = [](const char* field, const std::string& why) {
    throw NumericError("engine_state", std::string("state invariant violated on '") +
                                           field + "': " + why);
  };
  if (!finite(s.p_im) || !(s.p_im > 0.0)) fail("p_im", "must be finite and positive");
  if (!finite(s.p_em) || !(s.p_em > 0.0)) fail("p_em", "must be finite and positive");
  if (s.p_em < 0.5 * p.p_amb) fail("p_em", "below 0.5 * P_amb");
  if (!finite(s.omega_t) || s.omega_t < p.omega_min)
    fail("omega_t", "below omega_min");
  if (!finite(s.u_egr1) || s.u_egr1 < -20.0 || s.u_egr1 > 120.0)
    fail("u_egr1", "outside [-20, 120]");
  if (!finite(s.u_egr2) || s.u_egr2 < -20.0 || s.u_egr2 > 120.0)
    fail("u_egr2", "outside [-20, 120]");
  if (!finite(s.u_vgt) || s.u_vgt < -20.0 || s.u_vgt > 120.0)
    fail("u_vgt", "outside [-20, 120]");
}

Flows compute_flows(const EngineState& s, const EngineInputs& u, const EngineParams& p) {
  Flows f;
  f.t_em = p.t_em_base + p.k_fuel * u.u_delta;
  f.u_egr_eff = egr_actuator_output(s.u_egr1, s.u_egr2, p.k_egr);

  // speed-density intake flow (4-stroke: n_e/120 intake events per second)
  f.w_ei = p.eta_vol * s.p_im * u.n_e * p.v_d / (120.0 * p.r_a * p.t_im);
  f.w_f = 1.0e-6 * u.u_delta * u.n_e * p.n_cyl / 120.0;
  f.w_eo = f.w_ei + f.w_f;

  const double sqrt_ret = std::sqrt(p.r_e * f.t_em);

  // EGR orifice, exhaust -> intake; no backflow modeled
  const double pi_egr = std::min(s.p_im / s.p_em, 1.0);
  f.w_egr = p.a_egr_max * egr_area_fraction(f.u_egr_eff / 100.0, p.egr_area_lin) *
            s.p_em * psi_flow(pi_egr, p.gamma_e) / sqrt_ret;

  // turbine flow, exhaust -> ambient
  const double pi_t = std::min(p.p_amb / s.p_em, 1.0);
  f.w_t = p.a_t_max * vgt_area_fraction(s.u_vgt / 100.0, p.vgt_area_floor) * s.p_em *
          psi_flow(pi_t, p.gamma_e) / sqrt_ret;

  // quadratic compressor map in (omega_t, P_im/P_amb)
  const double w_hat = s.omega_t / p.omega_ref;
  const double pi_c = s.p_im / p.p_amb;
  f.w_c = std::max(0.0, (p.comp_c1 * w_hat + p.comp_c2 * w_hat * w_hat) *
                            (1.0 - p.comp_c3 * (pi_c - 1.0)));

  // natural breathing when the intake is below ambient
  const double pi_byp = std::min(s.p_im / p.p_amb, 1.0);
  f.w_byp = p.a_byp * p.p_amb * psi_flow(pi_byp, p.gamma_a) / std::sqrt(p.r_a * p.t_amb);

  // isentropic powers with fixed efficiencies
  const double kappa_a = (p.gamma_a - 1.0) / p.gamma_a;
  const double kappa_e = (p.gamma_e - 1.0) / p.gamma_e;
  f.pow_c = f.w_c * p.cp_a() * p.t_amb *
            (std::pow(std::max(pi_c, 1.0), kappa_a) - 1.0) / p.eta_c;
  f.pow_t = f.w_t * p.cp_e() * f.t_em * (1.0 - std::pow(pi_t, kappa_e)) * p.eta_t;
  return f;
}

StateDerivative derivatives(const EngineState& s, const EngineInputs& u,
                            const EngineParams& p) {
  validate(s, p);
  const Flows f = compute_flows(s, u, p);

  StateDerivative d;
  d.p_im = p.r_a * p.t_im / p.v_im * (f.w_c + f.w_byp + f.w_egr - f.w_ei);
  d.p_em = p.r_e * f.t_em / p.v_em * (f.w_eo - f.w_t - f.w_egr);
  d.omega_t = (f.pow_t * p.eta_m - f.pow_c) / (p.j_t * s.omega_t);
  d.u_egr1 = (u.u_egr - s.u_egr1) / p.tau_egr1;
  d.u_egr2 = (u.u_egr - s.u_egr2) / p.tau_egr2;
  d.u_vgt = (u.u_vgt - s.u_vgt) / p.tau_vgt;
  return d;
}

DerivedOutputs cylinder_fixed_point(double p_im, double p_em, double n_e, double u_delta,
                                    const EngineParams& p) {
  (void)n_e;
  if (!(p_im > 0.0) || !(p_em > 0.0)) {
    throw NumericError("cylinder_domain", "cylinder_fixed_point requires positive pressures");
  }
  const double t_e = p.t_em_base + p.k_fuel * u_delta;
  const double q_in = p.k_q * u_delta;
  const double pressure_factor = std::pow(p_em / p_im, 1.0 / p.gamma_a);
  const double rc_pow = std::pow(p.r_c, p.gamma_a - 1.0);

  double x_r = 0.05;
  double t_1 = p.t_im;
  constexpr int kMaxIter = 200;
  constexpr double kTol = 1.0e-6;
  for (int it = 0; it < kMaxIter; ++it) {
    const double x_v = 1.0 + q_in / (p.cv_a() * t_1 * rc_pow);
    double x_r_next = pressure_factor / (p.r_c * x_v);
    x_r_next = std::clamp(x_r_next, 1.0e-4, 0.5);
    const double t_1_next = x_r_next * t_e + (1.0 - x_r_next) * p.t_im;
    const double dx = std::abs(x_r_next - x_r);
    const double dt = std::abs(t_1_next - t_1) / t_1;
    x_r = x_r_next;
    t_1 = t_1_next;
    if (std::max(dx, dt) < kTol) {
      return DerivedOutputs{x_r, t_1, 0.0};
    }
  }
  throw NumericError("cylinder_convergence",
                     "cylinder fixed point did not converge in 200 iterations "
                     "(last x_r=" + io::format_exact(x_r) +
                     ", T_1=" + io::format_exact(t_1) + ")");
}

EngineState clamp_state(EngineState s, const EngineParams& p) {
  s.p_im = std::max(s.p_im, 0.2 * p.p_amb);
  s.p_em = std::max(s.p_em, 0.5 * p.p_amb);
  s.omega_t = std::max(s.omega_t, p.omega_min);
  s.u_egr1 = std::clamp(s.u_egr1, -20.0, 120.0);
  s.u_egr2 = std::clamp(s.u_egr2, -20.0, 120.0);
  s.u_vgt = std::clamp(s.u_vgt, -20.0, 120.0);
  return s;
}

namespace {

std::array<double, 6> pack(const EngineState& s) {
  return {s.p_im, s.p_em, s.omega_t, s.u_egr1, s.u_egr2, s.u_vgt};
}

EngineState unpack(const std::array<double, 6>& v) {
  return EngineState{v[0], v[1], v[2], v[3], v[4], v[5]};
}

void check_finite(const StateDerivative& d) {
  const auto fail = [](const char* field) {
    throw NumericError("engine_derivative",
                       std::string("non-finite derivative for '") + field + "'");
  };
  if (!finite(d.p_im)) fail("p_im");
  if (!finite(d.p_em)) fail("p_em");
  if (!finite(d.omega_t)) fail("omega_t");
  if (!finite(d.u_egr1)) fail("u_egr1");
  if (!finite(d.u_egr2)) fail("u_egr2");
  if (!finite(d.u_vgt)) fail("u_vgt");
}

}  // namespace

EngineState rk4_step(const EngineState& s, const EngineInputs& u, double dt,
                     const EngineParams& p) {
  if (!(dt > 0.0)) throw ConfigError("integrator", "rk4_step requires dt > 0");
  validate(s, p);
  // Stage states are clamped before evaluation so a trajectory riding an
  // invariant boundary (e.g. omega_t at omega_min) stays integrable.
  const auto rhs = [&](const std::array<double, 6>& y) {
    const StateDerivative d = derivatives(clamp_state(unpack(y), p), u, p);
    check_finite(d);
    return std::array<double, 6>{d.p_im, d.p_em, d.omega_t, d.u_egr1, d.u_egr2, d.u_vgt};
  };
  return clamp_state(unpack(rk4_step_array<6>(pack(s), dt, rhs)), p);
}

double Trajectory::output(int state, std::size_t i) const {
  switch (state) {
    case 0: return p_im[i];
    case 1: return p_em[i];
    case 2: return x_r[i];
    case 3: return t_1[i];
    case 4: return omega_t[i];
    case 5: return u_egr_act[i];
    case 6: return u_vgt_act[i];
    default: throw std::out_of_range("output state index");
  }
}

const char* Trajectory::state_name(int state) {
  static const char* names[kNumOutputStates] = {"P_im",    "P_em",      "x_r",     "T_1",
                                                "omega_t", "u_egr_act", "u_vgt_act"};
  return names[state];
}

const char* Trajectory::state_label(int state) {
  static const char* labels[kNumOutputStates] = {
      "intake manifold pressure [Pa]", "exhaust manifold pressure [Pa]",
      "residual gas fraction [-]",     "charge temperature at IVC [K]",
      "turbo speed [rad/s]",           "EGR actuator output [%]",
      "VGT actuator position [%]"};
  return labels[state];
}

Trajectory simulate(const std::vector<EngineInputs>& inputs, const EngineState& s0,
                    const EngineParams& p, double dt_int) {
  validate(p);
  if (!(dt_int > 0.0)) throw ConfigError("integrator", "dt_int must be positive");
  const double steps_real = kSamplePeriod / dt_int;
  const int steps = static_cast<int>(std::lround(steps_real));
  if (steps < 1 || std::abs(steps_real - steps) > 1.0e-9) {
    throw ConfigError("integrator", "dt_int must divide the 0.5 s sample period evenly");
  }

  Trajectory traj;
  traj.t.reserve(inputs.size());
  EngineState s = s0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const double t_now = static_cast<double>(i) * kSamplePeriod;
    try {
      const Flows f = compute_flows(s, inputs[i], p);
      const DerivedOutputs cyl =
          cylinder_fixed_point(s.p_im, s.p_em, inputs[i].n_e, inputs[i].u_delta, p);
      traj.t.push_back(t_now);
      traj.inputs.push_back(inputs[i]);
      traj.p_im.push_back(s.p_im);
      traj.p_em.push_back(s.p_em);
      traj.x_r.push_back(cyl.x_r);
      traj.t_1.push_back(cyl.t_1);
      traj.omega_t.push_back(s.omega_t);
      traj.u_egr_act.push_back(f.u_egr_eff);
      traj.u_vgt_act.push_back(std::clamp(s.u_vgt, 0.0, 100.0));
      // advance to the next sample under zero-order-held inputs
      if (i + 1 < inputs.size()) {
        for (int k = 0; k < steps; ++k) s = rk4_step(s, inputs[i], dt_int, p);
      }
    } catch (const Error& e) {
      throw NumericError(e.code(),
                         "at t=" + io::format_sig9(t_now) + " s: " + e.what());
    }
  }
  return traj;
}

EngineState settle(const EngineInputs& u, EngineState s, const EngineParams& p,
                   double duration, double dt_int) {
  const long steps = std::lround(duration / dt_int);
  for (long k = 0; k < steps; ++k) s = rk4_step(s, u, dt_int, p);
  return s;
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path,
                          const std::vector<std::string>& comments) {
  io::CsvWriter w(path);
  for (const auto& c : comments) w.comment(c);
  w.row({"t", "n_e", "u_delta", "u_egr", "u_vgt", "P_im", "P_em", "x_r", "T_1",
         "omega_t", "u_egr_act", "u_vgt_act"});
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const auto& u = traj.inputs[i];
    w.row({io::format_sig9(traj.t[i]), io::format_sig9(u.n_e),
           io::format_sig9(u.u_delta), io::format_sig9(u.u_egr),
           io::format_sig9(u.u_vgt), io::format_sig9(traj.p_im[i]),
           io::format_sig9(traj.p_em[i]), io::format_sig9(traj.x_r[i]),
           io::format_sig9(traj.t_1[i]), io::format_sig9(traj.omega_t[i]),
           io::format_sig9(traj.u_egr_act[i]), io::format_sig9(traj.u_vgt_act[i])});
  }
  w.close();
}

Trajectory read_trajectory_csv(const std::string& path) {
  const io::CsvFile f = io::CsvFile::read(path);
  const std::vector<std::string> expected = {"t",    "n_e", "u_delta", "u_egr",
                                             "u_vgt", "P_im", "P_em",   "x_r",
                                             "T_1",  "omega_t", "u_egr_act", "u_vgt_act"};
  if (f.header() != expected) {
    throw DataError("trajectory_header", "unexpected trajectory CSV header in '" + path + "'");
  }
  Trajectory traj;
  for (const auto& row : f.rows()) {
    if (row.size() != expected.size()) {
      throw DataError("trajectory_row", "malformed trajectory row in '" + path + "'");
    }
    traj.t.push_back(io::parse_double(row[0]));
    EngineInputs u;
    u.n_e = io::parse_double(row[1]);
    u.u_delta = io::parse_double(row[2]);
    u.u_egr = io::parse_double(row[3]);
    u.u_vgt = io::parse_double(row[4]);
    traj.inputs.push_back(u);
    traj.p_im.push_back(io::parse_double(row[5]));
    traj.p_em.push_back(io::parse_double(row[6]));
    traj.x_r.push_back(io::parse_double(row[7]));
    traj.t_1.push_back(io::parse_double(row[8]));
    traj.omega_t.push_back(io::parse_double(row[9]));
    traj.u_egr_act.push_back(io::parse_double(row[10]));
    traj.u_vgt_act.push_back(io::parse_double(row[11]));
  }
  return traj;
}

}  // namespace dieselop::engine
