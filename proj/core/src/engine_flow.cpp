#include "dieselop/engine/flow.hpp"

#include <algorithm>
#include <cmath>

#include "dieselop/errors.hpp"

namespace dieselop::engine {

double critical_pressure_ratio(double gamma) {
  return std::pow(2.0 / (gamma + 1.0), gamma / (gamma - 1.0));
}

double psi_flow(double pi, double gamma) {
  if (!(gamma > 1.0)) {
    throw NumericError("psi_domain", "psi_flow requires gamma > 1");
  }
  if (!(pi > 0.0) || pi > 1.0) {
    throw NumericError("psi_domain", "psi_flow requires pressure ratio in (0, 1]");
  }
  const double pi_crit = critical_pressure_ratio(gamma);
  const double p = std::max(pi, pi_crit);  // choked below pi_crit
  const double term = std::pow(p, 2.0 / gamma) - std::pow(p, (gamma + 1.0) / gamma);
  const double val = 2.0 * gamma / (gamma - 1.0) * term;
  return std::sqrt(std::max(val, 0.0));
}

double egr_actuator_output(double u1, double u2, double k_egr) {
  const double raw = k_egr * u1 - (k_egr - 1.0) * u2;
  return std::clamp(raw, 0.0, 100.0);
}

double egr_area_fraction(double x, double lin_coeff) {
  const double t = std::clamp(x, 0.0, 1.0);
  return lin_coeff * t + (1.0 - lin_coeff) * t * t;
}

double vgt_area_fraction(double x, double floor) {
  const double t = std::clamp(x, 0.0, 1.0);
  return floor + (1.0 - floor) * t * t;
}

}  // namespace dieselop::engine
