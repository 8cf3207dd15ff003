#pragma once

namespace cdcg {

/// Classical fourth-order Runge-Kutta step for any state type supporting
/// `+`, scalar `*`, and a callable `rhs(state, t) -> state`.
template <typename StateT, typename Rhs>
StateT rk4_step(const Rhs& rhs, const StateT& x, double t, double dt) {
  const double half = 0.5 * dt;
  const StateT k1 = rhs(x, t);
  const StateT k2 = rhs(StateT(x + half * k1), t + half);
  const StateT k3 = rhs(StateT(x + half * k2), t + half);
  const StateT k4 = rhs(StateT(x + dt * k3), t + dt);
  return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// Integrates from t0 to t1 in `steps` equal steps, calling
/// `observe(step_index, t, x)` after every step.
template <typename StateT, typename Rhs, typename Observer>
StateT rk4_integrate(const Rhs& rhs, StateT x, double t0, double t1, long steps, Observer&& observe) {
  const double dt = (t1 - t0) / static_cast<double>(steps);
  for (long k = 1; k <= steps; ++k) {
    x = rk4_step(rhs, x, t0 + (k - 1) * dt, dt);
    observe(k, k == steps ? t1 : t0 + k * dt, x);
  }
  return x;
}

}  // namespace cdcg
