#pragma once

namespace dieselop::engine {

/// Normalized compressible orifice flow factor.
///
/// For pi in (pi_crit, 1]:
///   Psi(pi) = sqrt( 2*gamma/(gamma-1) * (pi^(2/gamma) - pi^((gamma+1)/gamma)) )
/// and the choked value Psi(pi_crit) for pi <= pi_crit, where
///   pi_crit = (2/(gamma+1))^(gamma/(gamma-1)).
///
/// Throws NumericError for pi <= 0 or pi > 1, or gamma <= 1.
double psi_flow(double pi, double gamma);

double critical_pressure_ratio(double gamma);

/// Combined EGR actuator output: clamp(K*u1 - (K-1)*u2, 0, 100).
double egr_actuator_output(double u1, double u2, double k_egr);

/// Normalized effective-area polynomial for the EGR valve, x in [0, 1].
double egr_area_fraction(double x, double lin_coeff);

/// Normalized effective turbine area; floored so the turbine always flows.
double vgt_area_fraction(double x, double floor);

}  // namespace dieselop::engine
