#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "lgsst/geometry.hpp"

namespace lgsst::dynamics {

/// Wraps an angle into (-pi, pi].
inline double normalize_angle(double a) {
  double r = std::remainder(a, 2.0 * std::numbers::pi);
  if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
  return r;
}

struct CarState {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  Vec2 position() const { return {x, y}; }
  std::array<double, 3> as_array() const { return {x, y, theta}; }
  friend bool operator==(const CarState&, const CarState&) = default;
};

struct CarControl {
  double v = 0.0;      // m/s
  double delta = 0.0;  // steering angle, rad

  friend bool operator==(const CarControl&, const CarControl&) = default;
};

struct CarParams {
  double wheelbase = 0.3;
  double v_min = 0.0;
  double v_max = 2.0;
  double delta_max = 0.5;

  void validate() const {
    if (!(wheelbase > 0.0)) throw std::invalid_argument("wheelbase must be positive");
    if (!(v_max >= v_min)) throw std::invalid_argument("v_max must be >= v_min");
    if (!(delta_max >= 0.0) || !(delta_max < std::numbers::pi / 2.0))
      throw std::invalid_argument("delta_max must lie in [0, pi/2)");
  }
};

struct Derivative {
  double dx = 0.0, dy = 0.0, dtheta = 0.0;
};

/// Kinematic Ackermann (bicycle) model.
inline Derivative derivative(const CarState& s, const CarControl& u, double wheelbase) {
  return {u.v * std::cos(s.theta), u.v * std::sin(s.theta), u.v / wheelbase * std::tan(u.delta)};
}

struct Sample {
  double t = 0.0;
  CarState state;
};

/// Substep states of one constant-control propagation, t = 0 first.
using PropagationResult = std::vector<Sample>;

namespace detail {

inline CarState rk4_step(const CarState& s, const CarControl& u, double h, double wheelbase) {
  auto shifted = [](const CarState& b, const Derivative& d, double k) {
    return CarState{b.x + k * d.dx, b.y + k * d.dy, b.theta + k * d.dtheta};
  };
  const Derivative k1 = derivative(s, u, wheelbase);
  const Derivative k2 = derivative(shifted(s, k1, h / 2), u, wheelbase);
  const Derivative k3 = derivative(shifted(s, k2, h / 2), u, wheelbase);
  const Derivative k4 = derivative(shifted(s, k3, h), u, wheelbase);
  CarState out{s.x + h / 6 * (k1.dx + 2 * k2.dx + 2 * k3.dx + k4.dx),
               s.y + h / 6 * (k1.dy + 2 * k2.dy + 2 * k3.dy + k4.dy),
               s.theta + h / 6 * (k1.dtheta + 2 * k2.dtheta + 2 * k3.dtheta + k4.dtheta)};
  out.theta = normalize_angle(out.theta);
  return out;
}

}  // namespace detail

/// Number of integrator substeps for a propagation of `duration`.
inline std::size_t substep_count(double duration, double dt) {
  if (duration <= 0.0) return 0;
  auto n = static_cast<std::size_t>(std::floor(duration / dt));
  if (duration - static_cast<double>(n) * dt > 1e-9 * dt) ++n;
  return n;
}

/// Time of substep k (1-based) inside a propagation.
inline double substep_time(std::size_t k, std::size_t n, double duration, double dt) {
  return k == n ? duration : static_cast<double>(k) * dt;
}

/// Calls visit(t, state) for each substep after the start. Fixed-step RK4;
/// the last step is shortened so the final time equals `duration`.
template <typename Visitor>
inline CarState propagate_visit(const CarState& start, const CarControl& u, double duration, double dt, double wheelbase,
                                Visitor&& visit) {
  if (!(dt > 0.0)) throw std::invalid_argument("integrator step must be positive");
  const std::size_t n = substep_count(duration, dt);
  CarState s = start;
  double prev = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double t = substep_time(k, n, duration, dt);
    s = detail::rk4_step(s, u, t - prev, wheelbase);
    prev = t;
    if (!visit(t, s)) break;
  }
  return s;
}

inline PropagationResult propagate(const CarState& start, const CarControl& u, double duration, double dt,
                                   double wheelbase) {
  PropagationResult out;
  out.reserve(substep_count(duration, dt) + 1);
  out.push_back({0.0, start});
  propagate_visit(start, u, duration, dt, wheelbase, [&](double t, const CarState& s) {
    out.push_back({t, s});
    return true;
  });
  return out;
}

using Rng = std::mt19937_64;

inline CarControl sample_control(Rng& rng, const CarParams& p) {
  std::uniform_real_distribution<double> v(p.v_min, p.v_max);
  std::uniform_real_distribution<double> d(-p.delta_max, p.delta_max);
  const double vv = p.v_min == p.v_max ? p.v_min : v(rng);
  const double dd = p.delta_max == 0.0 ? 0.0 : d(rng);
  return {vv, dd};
}

inline double sample_duration(Rng& rng, double t_max) {
  return std::uniform_real_distribution<double>(0.0, t_max)(rng);
}

}  // namespace lgsst::dynamics
