#pragma once

#include <cmath>
#include <vector>

#include "lgsst/dynamics.hpp"
#include "lgsst/planner.hpp"
#include "lgsst/stl/formula.hpp"
#include "lgsst/stl/semantics.hpp"

namespace lgsst::verify {

/// Re-propagates the controls of a trajectory from `x_init` and returns the
/// substep trace. Substep times are parent.t + tau, as in the planner.
inline stl::Trace simulate(const planner::Trajectory& traj, const dynamics::CarState& x_init, double dt,
                           double wheelbase) {
  std::vector<double> times{0.0};
  std::vector<std::vector<double>> states;
  dynamics::CarState s{x_init.x, x_init.y, dynamics::normalize_angle(x_init.theta)};
  states.push_back({s.x, s.y, s.theta});
  double t0 = 0.0;
  for (std::size_t k = 1; k < traj.size(); ++k) {
    const auto& p = traj[k];
    s = dynamics::propagate_visit(s, p.control, p.duration, dt, wheelbase, [&](double tau, const dynamics::CarState& x) {
      times.push_back(t0 + tau);
      states.push_back({x.x, x.y, x.theta});
      return true;
    });
    t0 += p.duration;
  }
  return stl::Trace(std::move(times), std::move(states));
}

struct Replay {
  double robustness = -stl::kInfinity;
  bool boolean = false;
  double max_state_error = 0.0;  // stored vs. re-simulated node states
};

/// Offline check of a returned trajectory against the full formula.
inline Replay replay(const planner::Trajectory& traj, const dynamics::CarState& x_init, const stl::Formula& phi,
                     double dt, double wheelbase) {
  Replay out;
  if (traj.empty()) return out;
  dynamics::CarState s{x_init.x, x_init.y, dynamics::normalize_angle(x_init.theta)};
  for (std::size_t k = 1; k < traj.size(); ++k) {
    s = dynamics::propagate_visit(s, traj[k].control, traj[k].duration, dt, wheelbase,
                                  [](double, const dynamics::CarState&) { return true; });
    const auto& ref = traj[k].state;
    out.max_state_error = std::max({out.max_state_error, std::abs(s.x - ref.x), std::abs(s.y - ref.y),
                                    std::abs(dynamics::normalize_angle(s.theta - ref.theta))});
  }
  const stl::Trace trace = simulate(traj, x_init, dt, wheelbase);
  try {
    out.robustness = stl::robustness(trace, phi);
    out.boolean = stl::boolean_sat(trace, phi);
  } catch (const stl::EmptyWindowError&) {
    out.robustness = -stl::kInfinity;
    out.boolean = false;
  }
  return out;
}

}  // namespace lgsst::verify
