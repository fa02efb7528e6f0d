#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgsst/lead.hpp"
#include "lgsst/monitor.hpp"
#include "lgsst/planner.hpp"
#include "lgsst/scenario.hpp"
#include "lgsst/taskplan.hpp"

namespace lgsst {

/// Seeds derived from a run seed: order k uses seed + k for its lead, and
/// the mixed value below for its planner.
inline std::uint64_t order_seed(std::uint64_t seed, std::size_t order_index) { return seed + order_index; }
inline std::uint64_t planner_seed(std::uint64_t order_seed) { return order_seed ^ 0x9E3779B97F4A7C15ull; }

struct OrderAttempt {
  taskplan::PlanOrder order;
  std::uint64_t seed = 0;
  double budget = 0.0;
  double started = 0.0;  // solve clock when the planner started
  bool lead_built = false;
  std::string lead_error;
  std::optional<geolead::LeadPath> lead;
  std::optional<planner::PlanResult> result;
};

struct SolveReport {
  std::vector<OrderAttempt> attempts;
  std::optional<std::size_t> winner;  // index into attempts
  double elapsed = 0.0;               // wall seconds (virtual in deterministic mode)

  const planner::PlanResult* winning_result() const { return winner ? &*attempts[*winner].result : nullptr; }
};

struct SolveOptions {
  double budget = 60.0;  // total, shared across candidate orders
  std::uint64_t seed = 1;
  bool deterministic = false;
  /// Stop each order at its first satisfying node; false keeps a satisfied
  /// order planning until the end of the total budget.
  bool stop_on_satisfied = true;
};

/// Tries candidate orders in enumeration order. Each order gets the time
/// left divided by the orders left; the first satisfied order wins.
inline SolveReport solve(const Scenario& sc, const SolveOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  auto wall = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  const planner::Problem problem = sc.problem();
  const stl::FragmentSpec spec = sc.fragment();
  const monitor::MonitorTemplate tmpl(sc.formula);
  const auto orders = taskplan::candidate_plans(spec);

  SolveReport rep;
  double used = 0.0;  // virtual seconds in deterministic mode
  for (std::size_t k = 0; k < orders.size(); ++k) {
    OrderAttempt a;
    a.order = orders[k];
    a.seed = order_seed(opt.seed, k);
    const double spent = opt.deterministic ? used : wall();
    a.budget = std::max(0.0, opt.budget - spent) / static_cast<double>(orders.size() - k);
    try {
      a.lead = geolead::build_lead(a.order, spec, problem.workspace, sc.x_init.position(), a.seed, sc.lead);
      a.lead_built = true;
    } catch (const geolead::NoPathError& e) {
      a.lead_error = e.what();
    }
    if (a.lead_built && a.budget > 0.0) {
      planner::PlannerParams p = sc.planner;
      p.deterministic = opt.deterministic;
      p.stop_on_satisfied = opt.stop_on_satisfied;
      p.time_budget = a.budget;
      a.started = opt.deterministic ? used : wall();
      planner::SstStlPlanner pl(problem, tmpl, &*a.lead, p, planner_seed(a.seed));
      planner::PlanResult r = pl.run();
      if (r.satisfied && !opt.stop_on_satisfied) {
        // Anytime: the winning order keeps the rest of the total budget.
        const double rest = opt.budget - (opt.deterministic ? used + r.elapsed : wall());
        if (rest > 0.0) r = pl.run_until(r.elapsed + rest);
      }
      used += r.elapsed;
      a.result = std::move(r);
    }
    rep.attempts.push_back(std::move(a));
    if (rep.attempts.back().result && rep.attempts.back().result->satisfied) {
      rep.winner = k;
      break;
    }
  }
  rep.elapsed = opt.deterministic ? used : wall();
  return rep;
}

}  // namespace lgsst
