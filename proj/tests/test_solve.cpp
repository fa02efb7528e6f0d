#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "json.hpp"
#include "lgsst/scenario.hpp"
#include "lgsst/solve.hpp"
#include "lgsst/trajectory_io.hpp"
#include "lgsst/verify.hpp"

using namespace lgsst;

namespace {

const std::string kDir = std::string(LGSST_SOURCE_DIR) + "/scenarios/";

Scenario from_text(const char* text) { return scenario_from_json(nlohmann::json::parse(text)); }

SolveOptions det(double budget, std::uint64_t seed = 1) {
  SolveOptions o;
  o.budget = budget;
  o.seed = seed;
  o.deterministic = true;
  return o;
}

}  // namespace

TEST(Solve, StartInsideGoal) {
  const Scenario sc = load_scenario(kDir + "trivial.scenario.json");
  const SolveReport rep = solve(sc, det(5));
  ASSERT_TRUE(rep.winner.has_value());
  EXPECT_EQ(*rep.winner, 0u);
  ASSERT_NE(rep.winning_result(), nullptr);
  EXPECT_EQ(rep.winning_result()->trajectory.size(), 1u);
}

TEST(Solve, WalledOffGoals) {
  // both goals sit in closed boxes
  const Scenario sc = from_text(R"json({
    "schema": 1,
    "workspace": {"bounds": [0, 10, 0, 10], "obstacles": [
      [[6, 6], [9, 6], [9, 6.5], [6, 6.5]], [[6, 8.5], [9, 8.5], [9, 9], [6, 9]],
      [[6, 6.5], [6.5, 6.5], [6.5, 8.5], [6, 8.5]], [[8.5, 6.5], [9, 6.5], [9, 8.5], [8.5, 8.5]],
      [[1, 6], [4, 6], [4, 6.5], [1, 6.5]], [[1, 8.5], [4, 8.5], [4, 9], [1, 9]],
      [[1, 6.5], [1.5, 6.5], [1.5, 8.5], [1, 8.5]], [[3.5, 6.5], [4, 6.5], [4, 8.5], [3.5, 8.5]]]},
    "x_init": [2, 2, 0],
    "formula": "F (dist(x,y; 7.5,7.5) <= 0.3) & F (dist(x,y; 2.5,7.5) <= 0.3)",
    "lead": {"iterations": 600}
  })json");
  const SolveReport rep = solve(sc, det(2));
  EXPECT_FALSE(rep.winner.has_value());
  ASSERT_EQ(rep.attempts.size(), 2u);
  for (const auto& a : rep.attempts) {
    EXPECT_FALSE(a.lead_built);
    EXPECT_FALSE(a.lead_error.empty());
    EXPECT_TRUE(!a.result || !a.result->satisfied);
  }
}

TEST(Solve, SplitsBudgetAcrossOrders) {
  // unreachable deadline: every order runs out its share
  const Scenario sc = from_text(R"json({
    "schema": 1,
    "workspace": {"bounds": [0, 12, 0, 8]},
    "x_init": [1, 1, 0],
    "formula": "F[0,1] (dist(x,y; 11,7) <= 0.3) & F (dist(x,y; 6,4) <= 0.3)",
    "planner": {"max_duration": 0.5},
    "lead": {"iterations": 800}
  })json");
  const SolveReport rep = solve(sc, det(0.4));
  EXPECT_FALSE(rep.winner.has_value());
  ASSERT_EQ(rep.attempts.size(), 2u);
  EXPECT_DOUBLE_EQ(rep.attempts[0].budget, 0.2);
  EXPECT_NEAR(rep.attempts[1].budget, 0.4 - rep.attempts[0].result->elapsed, 1e-12);
  EXPECT_EQ(rep.attempts[1].seed, order_seed(1, 1));
  EXPECT_NEAR(rep.elapsed, 0.4, 1e-3);
  EXPECT_DOUBLE_EQ(rep.attempts[1].started, rep.attempts[0].result->elapsed);
}

TEST(Solve, WinnerReplaysAndIsDeterministic) {
  const Scenario sc = load_scenario(kDir + "exp1.scenario.json");
  const SolveReport a = solve(sc, det(60, 3));
  const SolveReport b = solve(sc, det(60, 3));
  ASSERT_TRUE(a.winner.has_value());
  const auto& traj = a.winning_result()->trajectory;
  std::ostringstream ta, tb;
  write_trajectory(ta, traj);
  write_trajectory(tb, b.winning_result()->trajectory);
  EXPECT_EQ(ta.str(), tb.str());
  const auto rep = verify::replay(traj, sc.x_init, sc.formula, sc.planner.dt, sc.car.wheelbase);
  EXPECT_GE(rep.robustness, 0.0);
  EXPECT_TRUE(rep.boolean);
}

TEST(Solve, Seeds) {
  EXPECT_EQ(order_seed(10, 3), 13u);
  EXPECT_NE(planner_seed(1), planner_seed(2));
}

TEST(TrajectoryIo, RoundTrip) {
  planner::Trajectory traj{{0.0, {1, 2, 0.5}, {}, 0.0, 0}, {0.75, {1.5, 2.25, 0.625}, {1.25, -0.125}, 0.75, 1}};
  std::stringstream s;
  write_trajectory(s, traj);
  const auto back = read_trajectory(s);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].state, traj[1].state);
  EXPECT_EQ(back[1].control, traj[1].control);
  EXPECT_DOUBLE_EQ(back[1].duration, 0.75);
  std::istringstream bad("not a trajectory\n");
  EXPECT_THROW(read_trajectory(bad), std::runtime_error);
}
