#pragma once

#include <array>

namespace dieselop::engine {

/// Commanded inputs, sampled at 2 Hz and held zero-order in between.
struct EngineInputs {
  double n_e = 1200.0;     ///< engine speed [rpm]
  double u_delta = 80.0;   ///< fuel per cylinder per cycle [mg/cycle]
  double u_egr = 30.0;     ///< EGR valve command [%]
  double u_vgt = 60.0;     ///< VGT vane command [%]
};

/// Bounds the input trajectory must respect.
struct InputBounds {
  std::array<double, 2> n_e{400.0, 2500.0};
  std::array<double, 2> u_delta{0.0, 300.0};
  std::array<double, 2> u_egr{0.0, 100.0};
  std::array<double, 2> u_vgt{0.0, 100.0};
};

/// ODE state: manifold pressures, turbo shaft speed, actuator internals.
struct EngineState {
  double p_im = 101325.0;    ///< intake manifold pressure [Pa]
  double p_em = 110000.0;    ///< exhaust manifold pressure [Pa]
  double omega_t = 2000.0;   ///< turbo speed [rad/s]
  double u_egr1 = 0.0;       ///< fast EGR actuator lag [%]
  double u_egr2 = 0.0;       ///< slow EGR actuator lag [%]
  double u_vgt = 60.0;       ///< VGT actuator position [%]
};

/// Algebraic per-sample outputs computed on top of the ODE state.
struct DerivedOutputs {
  double x_r = 0.05;        ///< residual gas fraction [-]
  double t_1 = 320.0;       ///< charge temperature at inlet-valve closing [K]
  double u_egr_eff = 0.0;   ///< combined EGR actuator output [%]
};

/// Lumped model constants. Defaults are plausible heavy-duty diesel values,
/// all overridable through the run config.
struct EngineParams {
  // manifolds
  double v_im = 0.022;        ///< intake manifold volume [m^3]
  double v_em = 0.020;        ///< exhaust manifold volume [m^3]
  double t_im = 300.0;        ///< intake manifold temperature [K]
  double t_em_base = 600.0;   ///< exhaust temperature at zero fueling [K]
  double k_fuel = 2.0;        ///< exhaust temperature rise per mg/cycle [K/(mg/cycle)]

  // gas properties
  double r_a = 287.0;         ///< air gas constant [J/(kg K)]
  double r_e = 286.0;         ///< exhaust gas constant [J/(kg K)]
  double gamma_a = 1.40;
  double gamma_e = 1.35;

  // engine geometry
  double v_d = 0.0127;        ///< displaced volume, all cylinders [m^3]
  int n_cyl = 6;
  double r_c = 17.0;          ///< compression ratio
  double eta_vol = 0.90;      ///< volumetric efficiency

  // turbocharger
  double j_t = 2.0e-4;        ///< turbo inertia [kg m^2]
  double eta_m = 0.90;        ///< turbo mechanical efficiency
  double eta_c = 0.62;        ///< compressor isentropic efficiency
  double eta_t = 0.65;        ///< turbine isentropic efficiency
  double omega_min = 250.0;   ///< lower clamp on turbo speed [rad/s]
  double omega_ref = 10000.0; ///< compressor map speed normalization [rad/s]
  // quadratic compressor map: W_c = max(0, (c1*w + c2*w^2) * (1 - c3*(Pi_c - 1)))
  double comp_c1 = 0.20;
  double comp_c2 = 0.27;
  double comp_c3 = 0.30;

  // valves and actuators
  double a_egr_max = 6.0e-4;  ///< max effective EGR area [m^2]
  double a_t_max = 2.4e-3;    ///< max effective turbine area [m^2]
  double a_byp = 1.0e-3;      ///< ambient->intake breathing orifice area [m^2]
  double k_egr = 1.8;         ///< EGR actuator overshoot gain
  double tau_egr1 = 0.05;     ///< fast EGR lag [s]
  double tau_egr2 = 0.13;     ///< slow EGR lag [s]
  double tau_vgt = 0.025;     ///< VGT lag [s]
  // normalized effective-area polynomials a(x) = lin*x + (1-lin)*x^2, x in [0,1]
  double egr_area_lin = 0.30;
  double vgt_area_floor = 0.15;  ///< turbine always flows

  // cylinder / combustion surrogate
  double k_q = 13000.0;       ///< specific heat release per mg/cycle [J/kg per mg/cycle]

  // ambient
  double p_amb = 101325.0;    ///< [Pa]
  double t_amb = 298.0;       ///< [K]

  double cp_a() const { return gamma_a * r_a / (gamma_a - 1.0); }
  double cp_e() const { return gamma_e * r_e / (gamma_e - 1.0); }
  double cv_a() const { return r_a / (gamma_a - 1.0); }
};

/// Throws ConfigError if a parameter violates its invariant
/// (non-positive volume/inertia/time constant/area, K_egr < 1, ...).
void validate(const EngineParams& p);

/// Throws NumericError naming the offending field if the state breaks its
/// invariants (pressures positive, P_em >= 0.5 P_amb, omega >= omega_min,
/// actuator internals within [-20, 120]).
void validate(const EngineState& s, const EngineParams& p);

}  // namespace dieselop::engine
