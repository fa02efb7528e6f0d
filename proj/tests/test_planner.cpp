#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "lgsst/lead.hpp"
#include "lgsst/planner.hpp"
#include "lgsst/scenario.hpp"
#include "lgsst/solve.hpp"
#include "lgsst/stl/parser.hpp"
#include "lgsst/taskplan.hpp"
#include "lgsst/verify.hpp"

using namespace lgsst;
using planner::PlannerParams;

namespace {

const std::string kDir = std::string(LGSST_SOURCE_DIR) + "/scenarios/";

PlannerParams det(double budget) {
  PlannerParams p;
  p.deterministic = true;
  p.time_budget = budget;
  return p;
}

planner::Problem open_problem(dynamics::CarState x0) { return {Workspace({0, 12, 0, 8}, {}), {}, x0}; }

geolead::LeadPath lead_for(const stl::Formula& phi, const planner::Problem& pr, std::uint64_t seed) {
  const auto spec = stl::extract_fragment(phi);
  return geolead::build_lead(taskplan::candidate_plans(spec).front(), spec, pr.workspace, pr.x_init.position(), seed);
}

}  // namespace

TEST(Planner, StartInsideGoal) {
  const auto phi = stl::parse_formula("F (dist(x,y; 2,2) <= 0.3)");
  const monitor::MonitorTemplate tmpl(phi);
  const auto pr = open_problem({2.1, 2, 0});
  const auto lead = lead_for(phi, pr, 1);
  for (const auto& r : {planner::lg_sst_stl(pr, lead, tmpl, det(10), 1), planner::baseline_sst_stl(pr, tmpl, det(10), 1)}) {
    EXPECT_TRUE(r.satisfied);
    EXPECT_EQ(r.iterations, 0u);
    EXPECT_EQ(r.cost, 0.0);
    ASSERT_EQ(r.trajectory.size(), 1u);
    EXPECT_EQ(r.metrics.front().best_cost, 0.0);
  }
}

TEST(Planner, ReachesGoalAndReplays) {
  const auto phi = stl::parse_formula("F (dist(x,y; 6,4) <= 0.3)");
  const monitor::MonitorTemplate tmpl(phi);
  const auto pr = open_problem({1, 4, 0});
  const auto lead = lead_for(phi, pr, 3);
  for (bool guided : {true, false}) {
    const auto r = guided ? planner::lg_sst_stl(pr, lead, tmpl, det(30), 5) : planner::baseline_sst_stl(pr, tmpl, det(30), 5);
    ASSERT_TRUE(r.satisfied) << (guided ? "lg" : "baseline");
    const auto rep = verify::replay(r.trajectory, pr.x_init, phi, 0.05, pr.car.wheelbase);
    EXPECT_GE(rep.robustness, 0.0);
    EXPECT_TRUE(rep.boolean);
    EXPECT_LT(rep.max_state_error, 1e-9);
    EXPECT_NEAR(rep.robustness, *r.robustness, 1e-9);
  }
}

TEST(Planner, ExperimentOneBothSatisfy) {
  const Scenario sc = load_scenario(kDir + "exp1.scenario.json");
  const monitor::MonitorTemplate tmpl(sc.formula);
  const auto spec = sc.fragment();
  PlannerParams p = sc.planner;
  p.deterministic = true;
  p.time_budget = 60;
  const auto lead = geolead::build_lead(taskplan::candidate_plans(spec).front(), spec, sc.workspace(),
                                        sc.x_init.position(), 1, sc.lead);
  EXPECT_TRUE(planner::lg_sst_stl(sc.problem(), lead, tmpl, p, 1).satisfied);
  EXPECT_TRUE(planner::baseline_sst_stl(sc.problem(), tmpl, p, 1).satisfied);
}

TEST(Planner, Deterministic) {
  const auto phi = stl::parse_formula("F[0,20] (dist(x,y; 6,4) <= 0.3) & F (dist(x,y; 9,2) <= 0.3)");
  const monitor::MonitorTemplate tmpl(phi);
  const auto pr = open_problem({1, 4, 0});
  const auto lead = lead_for(phi, pr, 2);
  PlannerParams p = det(5);
  p.stop_on_satisfied = false;
  auto same = [](const planner::PlanResult& a, const planner::PlanResult& b) {
    return a.trajectory == b.trajectory && a.metrics == b.metrics && a.stats == b.stats && a.states == b.states &&
           a.iterations == b.iterations && a.best_cost == b.best_cost;
  };
  EXPECT_TRUE(same(planner::baseline_sst_stl(pr, tmpl, p, 9), planner::baseline_sst_stl(pr, tmpl, p, 9)));
  EXPECT_TRUE(same(planner::lg_sst_stl(pr, lead, tmpl, p, 9), planner::lg_sst_stl(pr, lead, tmpl, p, 9)));
  EXPECT_FALSE(same(planner::baseline_sst_stl(pr, tmpl, p, 9), planner::baseline_sst_stl(pr, tmpl, p, 10)));
}

TEST(Planner, ResumableRunMatchesSingleRun) {
  const auto phi = stl::parse_formula("F (dist(x,y; 9,6) <= 0.3)");
  const monitor::MonitorTemplate tmpl(phi);
  const auto pr = open_problem({1, 1, 0});
  PlannerParams p = det(4);
  p.stop_on_satisfied = false;
  planner::SstStlPlanner a(pr, tmpl, nullptr, p, 4), b(pr, tmpl, nullptr, p, 4);
  const auto whole = a.run_until(4);
  b.run_until(1.5);
  const auto split = b.run_until(4);
  EXPECT_EQ(whole.trajectory, split.trajectory);
  EXPECT_EQ(whole.iterations, split.iterations);
  EXPECT_EQ(whole.best_cost, split.best_cost);
}

TEST(Planner, MetricsAreMonotone) {
  const auto phi = stl::parse_formula("F[0,30] (dist(x,y; 9,6) <= 0.3) & F (dist(x,y; 3,6) <= 0.3)");
  const monitor::MonitorTemplate tmpl(phi);
  const auto pr = open_problem({1, 1, 0});
  PlannerParams p = det(5);
  p.stop_on_satisfied = false;
  p.metrics_period = 100;
  const auto r = planner::baseline_sst_stl(pr, tmpl, p, 1);
  ASSERT_GT(r.metrics.size(), 2u);
  for (std::size_t i = 1; i < r.metrics.size(); ++i) {
    EXPECT_LE(r.metrics[i].best_cost, r.metrics[i - 1].best_cost);
    EXPECT_GE(r.metrics[i].states, r.metrics[i - 1].states);
    EXPECT_GE(r.metrics[i].seconds, r.metrics[i - 1].seconds);
  }
  EXPECT_GE(r.states, r.alive);
  EXPECT_EQ(r.metrics.back().iteration, r.iterations);
}

TEST(Planner, AuditFindsNoViolations) {
  const Scenario sc = load_scenario(kDir + "exp2.scenario.json");
  const monitor::MonitorTemplate tmpl(sc.formula);
  const auto spec = sc.fragment();
  PlannerParams p = sc.planner;
  p.deterministic = true;
  p.time_budget = 3;
  p.stop_on_satisfied = false;
  const auto lead = geolead::build_lead(taskplan::candidate_plans(spec).front(), spec, sc.workspace(),
                                        sc.x_init.position(), 1, sc.lead);
  planner::SstStlPlanner lg(sc.problem(), tmpl, &lead, p, 2);
  lg.run();
  const auto rep = lg.audit();
  EXPECT_GT(rep.nodes_checked, 100u);
  EXPECT_EQ(rep.total(), 0u);
  planner::SstStlPlanner base(sc.problem(), tmpl, nullptr, p, 2);
  base.run();
  EXPECT_EQ(base.audit().total(), 0u);
}

TEST(Planner, TreeDump) {
  const auto phi = stl::parse_formula("F (dist(x,y; 9,6) <= 0.3)");
  const monitor::MonitorTemplate tmpl(phi);
  planner::SstStlPlanner pl(open_problem({1, 1, 0}), tmpl, nullptr, det(0.05), 1);
  pl.run();
  std::ostringstream out;
  pl.dump_tree(out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "# lgsst-tree 1");
  std::size_t rows = 0;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') ++rows;
  EXPECT_EQ(rows, pl.nodes().size());
}

TEST(Planner, RejectsBadParameters) {
  const monitor::MonitorTemplate tmpl(stl::parse_formula("F (dist(x,y; 9,6) <= 0.3)"));
  PlannerParams p;
  p.pruning_radius = p.selection_radius;
  EXPECT_THROW(planner::SstStlPlanner(open_problem({1, 1, 0}), tmpl, nullptr, p, 1), std::invalid_argument);
  p = {};
  p.dt = 0;
  EXPECT_THROW(planner::SstStlPlanner(open_problem({1, 1, 0}), tmpl, nullptr, p, 1), std::invalid_argument);
}

TEST(Reconstruct, RootOnly) {
  std::vector<planner::TreeNode> nodes(1);
  const auto traj = planner::reconstruct(nodes, 0);
  ASSERT_EQ(traj.size(), 1u);
  EXPECT_EQ(traj[0].t, 0.0);
}

TEST(Reconstruct, TimesAddUpAndReplay) {
  const dynamics::CarParams car;
  std::vector<planner::TreeNode> nodes(1);
  const dynamics::CarControl controls[3] = {{1.0, 0.2}, {0.5, -0.4}, {1.5, 0.0}};
  for (int k = 0; k < 3; ++k) {
    planner::TreeNode n;
    const auto& parent = nodes.back();
    n.parent = static_cast<std::int32_t>(nodes.size() - 1);
    n.control = controls[k];
    n.duration = k + 1.0;
    n.t = parent.t + n.duration;
    n.state = dynamics::propagate(parent.state, n.control, n.duration, 0.05, car.wheelbase).back().state;
    nodes.push_back(n);
  }
  const auto traj = planner::reconstruct(nodes, 3);
  ASSERT_EQ(traj.size(), 4u);
  EXPECT_DOUBLE_EQ(traj.back().t, 6.0);
  const auto rep = verify::replay(traj, {}, stl::parse_formula("F (dist(x,y; 100,100) <= 0.3)"), 0.05, car.wheelbase);
  EXPECT_LT(rep.max_state_error, 1e-9);
  EXPECT_LT(rep.robustness, 0.0);
}
