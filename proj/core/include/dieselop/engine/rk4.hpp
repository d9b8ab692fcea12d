#pragma once

#include <array>
#include <cstddef>

namespace dieselop::engine {

/// One classical 4th-order Runge-Kutta step over a fixed-size state array.
/// `rhs` maps a state array to its time derivative.
template <std::size_t N, class Rhs>
std::array<double, N> rk4_step_array(const std::array<double, N>& y, double dt, Rhs&& rhs) {
  const auto axpy = [](const std::array<double, N>& a, double h,
                       const std::array<double, N>& d) {
    std::array<double, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + h * d[i];
    return r;
  };

  const std::array<double, N> k1 = rhs(y);
  const std::array<double, N> k2 = rhs(axpy(y, 0.5 * dt, k1));
  const std::array<double, N> k3 = rhs(axpy(y, 0.5 * dt, k2));
  const std::array<double, N> k4 = rhs(axpy(y, dt, k3));

  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = y[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

}  // namespace dieselop::engine
