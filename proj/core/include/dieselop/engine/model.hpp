#pragma once

#include <string>
#include <vector>

#include "dieselop/engine/params.hpp"

namespace dieselop::engine {

/// Mass flows and powers evaluated at one operating point. W_eo is formed as
/// W_ei + W_f so cylinder mass conservation holds bitwise.
struct Flows {
  double t_em = 0.0;       ///< exhaust gas temperature [K]
  double u_egr_eff = 0.0;  ///< combined EGR actuator output [%]
  double w_ei = 0.0;       ///< gas flow into cylinders [kg/s]
  double w_f = 0.0;        ///< fuel mass flow [kg/s]
  double w_eo = 0.0;       ///< cylinder-out exhaust flow [kg/s]
  double w_egr = 0.0;      ///< EGR flow, exhaust -> intake [kg/s]
  double w_t = 0.0;        ///< turbine flow [kg/s]
  double w_c = 0.0;        ///< compressor flow [kg/s]
  double w_byp = 0.0;      ///< ambient breathing flow into intake [kg/s]
  double pow_c = 0.0;      ///< compressor power draw [W]
  double pow_t = 0.0;      ///< turbine power [W]
};

struct StateDerivative {
  double p_im = 0.0;
  double p_em = 0.0;
  double omega_t = 0.0;
  double u_egr1 = 0.0;
  double u_egr2 = 0.0;
  double u_vgt = 0.0;
};

/// Evaluates all mass flows and powers; pure function of (s, u, p).
Flows compute_flows(const EngineState& s, const EngineInputs& u, const EngineParams& p);

/// Right-hand side of the gas-flow ODE. Validates the state first and throws
/// NumericError naming the offending field on an invariant violation.
StateDerivative derivatives(const EngineState& s, const EngineInputs& u, const EngineParams& p);

/// Residual gas fraction and charge temperature at inlet-valve closing,
/// solved by fixed-point iteration of
///   x_r = (P_em/P_im)^(1/gamma_a) / (r_c * x_v(T_1))
///   T_1 = x_r * T_e + (1 - x_r) * T_im
/// from (0.05, T_im). Tolerance 1e-6, at most 200 iterations; x_r clamped
/// to (1e-4, 0.5). Throws NumericError on non-convergence.
DerivedOutputs cylinder_fixed_point(double p_im, double p_em, double n_e, double u_delta,
                                    const EngineParams& p);

/// One classical RK4 step of `dt`, followed by clamping to the state
/// invariants. Throws NumericError if a derivative goes non-finite.
EngineState rk4_step(const EngineState& s, const EngineInputs& u, double dt,
                     const EngineParams& p);

/// Clamp a state into its invariant box.
EngineState clamp_state(EngineState s, const EngineParams& p);

/// 2 Hz labeled trajectory: inputs plus the seven emitted outputs
/// [P_im, P_em, x_r, T_1, omega_t, u_egr_act, u_vgt_act].
struct Trajectory {
  std::vector<double> t;
  std::vector<EngineInputs> inputs;
  // outputs, one vector per state, aligned with t
  std::vector<double> p_im, p_em, x_r, t_1, omega_t, u_egr_act, u_vgt_act;

  std::size_t size() const { return t.size(); }
  double output(int state, std::size_t i) const;
  static const char* state_name(int state);
  static const char* state_label(int state);  ///< human label for plots
};

inline constexpr int kNumOutputStates = 7;
inline constexpr double kSamplePeriod = 0.5;  // 2 Hz

/// Integrates the model with fixed-step RK4 (`dt_int` must divide the 0.5 s
/// sample period evenly) and emits one output row per 2 Hz input sample.
/// Inputs are held zero-order between samples. Errors from sub-operations are
/// rethrown with the timestamp attached.
Trajectory simulate(const std::vector<EngineInputs>& inputs, const EngineState& s0,
                    const EngineParams& p, double dt_int = 0.01);

/// Holds `u` constant for `duration` seconds and returns the settled state.
EngineState settle(const EngineInputs& u, EngineState s, const EngineParams& p,
                   double duration, double dt_int = 0.01);

/// Trajectory CSV: header
/// t,n_e,u_delta,u_egr,u_vgt,P_im,P_em,x_r,T_1,omega_t,u_egr_act,u_vgt_act
/// with floats at 9 significant digits. Leading '#' comment lines carry
/// provenance (config hash, tool version).
void write_trajectory_csv(const Trajectory& traj, const std::string& path,
                          const std::vector<std::string>& comments = {});
Trajectory read_trajectory_csv(const std::string& path);

}  // namespace dieselop::engine
