// lgsst command-line front end: validate, plans, lead, solve, bench, render.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lgsst/bench.hpp"
#include "lgsst/lead.hpp"
#include "lgsst/monitor.hpp"
#include "lgsst/planner.hpp"
#include "lgsst/render.hpp"
#include "lgsst/scenario.hpp"
#include "lgsst/solve.hpp"
#include "lgsst/stl/parser.hpp"
#include "lgsst/stl/print.hpp"
#include "lgsst/taskplan.hpp"
#include "lgsst/trajectory_io.hpp"
#include "lgsst/verify.hpp"

namespace fs = std::filesystem;
using namespace lgsst;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNoSolution = 3;

// LGSST_OUT_DIR overrides any output directory given on the command line.
std::string output_dir(const std::string& requested) {
  if (const char* env = std::getenv("LGSST_OUT_DIR"); env && *env) return env;
  return requested;
}

std::string order_text(const taskplan::PlanOrder& o) {
  std::string s;
  for (std::size_t i = 0; i < o.size(); ++i) s += (i ? " " : "") + std::to_string(o[i]);
  return s;
}

int cmd_validate(const std::string& path) {
  const Scenario sc = load_scenario(path);
  const auto spec = sc.fragment();
  std::cout << "scenario " << sc.name << (sc.reconstructed ? " (reconstructed geometry)" : "") << "\n"
            << "  formula: " << stl::to_string(sc.formula) << "\n"
            << "  goals: " << spec.goal_count() << " (" << spec.bounded_goals.size() << " bounded)\n"
            << "  obstacles: " << sc.obstacles.size() << "\n";
  for (const auto& w : sc.planner.warnings()) std::cout << "  warning: " << w << "\n";
  std::cout << "ok\n";
  return 0;
}

int cmd_plans(const std::string& path) {
  const Scenario sc = load_scenario(path);
  const auto orders = taskplan::candidate_plans(sc.fragment());
  for (std::size_t k = 0; k < orders.size(); ++k) std::cout << k << ": " << order_text(orders[k]) << "\n";
  return 0;
}

int cmd_lead(const std::string& path, std::size_t order_index, std::optional<std::uint64_t> seed,
             const std::string& svg, const std::string& text) {
  const Scenario sc = load_scenario(path);
  const auto spec = sc.fragment();
  const auto orders = taskplan::candidate_plans(spec);
  if (order_index >= orders.size()) throw ValidationError("order index out of range");
  const auto lead = geolead::build_lead(orders[order_index], spec, sc.workspace(), sc.x_init.position(),
                                        order_seed(seed.value_or(sc.seed), order_index), sc.lead);
  std::cout << "order " << order_text(orders[order_index]) << ", " << lead.layer_count() << " layers, length "
            << stl::format_number(polyline_length(lead.polyline())) << " m\n";
  for (const Vec2& p : lead.polyline()) std::cout << "  " << p.x << ' ' << p.y << "\n";
  if (!svg.empty()) render::render(sc, &lead, nullptr, svg);
  if (!text.empty()) save_lead(lead, text);
  return 0;
}

int cmd_solve(const std::string& path, const std::string& planner_name, std::optional<std::uint64_t> seed,
              std::optional<double> budget, bool deterministic, const std::string& out) {
  const Scenario sc = load_scenario(path);
  const std::uint64_t s = seed.value_or(sc.seed);
  const double b = budget.value_or(sc.planner.time_budget);
  if (!(b > 0.0)) throw ValidationError("budget must be positive");
  const std::string dir = output_dir(out);
  fs::create_directories(dir);
  const std::string stem = (fs::path(dir) / (sc.name + "_" + planner_name)).string();

  planner::Trajectory traj;
  bool satisfied = false;
  std::optional<geolead::LeadPath> lead;
  if (planner_name == "lg") {
    SolveOptions opt;
    opt.budget = b;
    opt.seed = s;
    opt.deterministic = deterministic;
    const SolveReport rep = solve(sc, opt);
    for (std::size_t k = 0; k < rep.attempts.size(); ++k) {
      const auto& a = rep.attempts[k];
      std::cout << "order " << k << " [" << order_text(a.order) << "] seed " << a.seed << " budget "
                << stl::format_number(a.budget) << " s: ";
      if (!a.lead_built) {
        std::cout << "lead failed (" << a.lead_error << ")\n";
        continue;
      }
      if (!a.result) {
        std::cout << "no time left\n";
        continue;
      }
      std::cout << (a.result->satisfied ? "satisfied" : "unsatisfied") << ", best J "
                << stl::format_number(a.result->best_cost) << ", states " << a.result->states << ", iterations "
                << a.result->iterations << "\n";
    }
    if (rep.winner) {
      traj = rep.attempts[*rep.winner].result->trajectory;
      lead = rep.attempts[*rep.winner].lead;
      satisfied = true;
    }
    std::cout << "elapsed " << (deterministic ? stl::format_number(rep.elapsed) : std::to_string(rep.elapsed))
              << " s" << (deterministic ? " (virtual)" : "") << "\n";
  } else if (planner_name == "baseline") {
    planner::PlannerParams p = sc.planner;
    p.time_budget = b;
    p.deterministic = deterministic;
    p.stop_on_satisfied = true;
    const monitor::MonitorTemplate tmpl(sc.formula);
    const auto r = planner::baseline_sst_stl(sc.problem(), tmpl, p, planner_seed(s));
    std::cout << (r.satisfied ? "satisfied" : "unsatisfied") << ", best J " << stl::format_number(r.best_cost)
              << ", states " << r.states << ", iterations " << r.iterations << "\n";
    traj = r.trajectory;
    satisfied = r.satisfied;
  } else {
    throw ValidationError("unknown planner '" + planner_name + "'");
  }

  if (!satisfied) {
    std::cout << "no satisfying trajectory\n";
    return kExitNoSolution;
  }
  const auto check = verify::replay(traj, sc.x_init, sc.formula, sc.planner.dt, sc.car.wheelbase);
  std::cout << "offline robustness " << stl::format_number(check.robustness) << "\n";
  save_trajectory(traj, stem + ".traj");
  render::render(sc, lead ? &*lead : nullptr, &traj, stem + ".svg");
  std::cout << "wrote " << stem << ".traj\n";
  return 0;
}

int cmd_bench(const std::string& path, bool paper_scale, bool deterministic, std::optional<int> runs,
              std::optional<double> budget, std::optional<int> workers, const std::string& out) {
  bench::BenchmarkConfig cfg = bench::load_config(path);
  if (paper_scale) cfg.paper_scale();
  if (deterministic) cfg.deterministic = true;
  if (runs) cfg.runs = *runs;
  if (budget) cfg.budget = *budget;
  if (workers) cfg.workers = *workers;
  if (!out.empty()) cfg.output = out;
  cfg.output = output_dir(cfg.output);
  cfg.validate();

  const auto results = bench::run_benchmark(cfg);
  bench::write_outputs(cfg, results, cfg.output);
  std::map<std::string, std::vector<bench::RunMetrics>> by_scenario;
  for (const auto& r : results) by_scenario[r.scenario].push_back(r);
  for (const auto& [name, rs] : by_scenario)
    render::plot_cost_curves(rs, cfg.budget, cfg.sample_period, (fs::path(cfg.output) / (name + "_cost.svg")).string());

  const auto summary = bench::summarize(cfg, results);
  for (const auto& g : summary["groups"])
    std::cout << g["scenario"].get<std::string>() << " / " << g["planner"].get<std::string>() << ": satisfied "
              << g["satisfied"] << "/" << g["runs"] << ", median states " << g["median_final_states"] << "\n";
  std::cout << "wrote " << cfg.output << "\n";
  return 0;
}

int cmd_render(const std::string& path, const std::string& trajectory, std::optional<std::size_t> lead_order,
               std::optional<std::uint64_t> seed, const std::string& out) {
  const Scenario sc = load_scenario(path);
  std::optional<planner::Trajectory> traj;
  if (!trajectory.empty()) traj = load_trajectory(trajectory);
  std::optional<geolead::LeadPath> lead;
  if (lead_order) {
    const auto spec = sc.fragment();
    const auto orders = taskplan::candidate_plans(spec);
    if (*lead_order >= orders.size()) throw ValidationError("order index out of range");
    lead = geolead::build_lead(orders[*lead_order], spec, sc.workspace(), sc.x_init.position(),
                               order_seed(seed.value_or(sc.seed), *lead_order), sc.lead);
  }
  render::render(sc, lead ? &*lead : nullptr, traj ? &*traj : nullptr, out);
  std::cout << "wrote " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lgsst: layer-guided kinodynamic planning for reach-region STL tasks"};
  app.require_subcommand(1);

  std::string scenario, config, planner_name = "lg", out = "out", svg, trajectory;
  std::optional<std::uint64_t> seed;
  std::optional<double> budget;
  std::optional<int> runs, workers;
  std::optional<std::size_t> lead_order;
  std::string lead_text;
  std::size_t order_index = 0;
  bool deterministic = false, paper_scale = false;

  auto* validate = app.add_subcommand("validate", "Check a scenario file");
  validate->add_option("scenario", scenario)->required();

  auto* plans = app.add_subcommand("plans", "List candidate goal orders");
  plans->add_option("scenario", scenario)->required();

  auto* lead = app.add_subcommand("lead", "Build and print the lead path of one order");
  lead->add_option("scenario", scenario)->required();
  lead->add_option("--order", order_index, "Candidate order index");
  lead->add_option("--seed", seed);
  lead->add_option("--svg", svg, "Also render to this SVG file");
  lead->add_option("--text", lead_text, "Also write the layer-labelled lead to this file");

  auto* solve_cmd = app.add_subcommand("solve", "Plan a satisfying trajectory");
  solve_cmd->add_option("scenario", scenario)->required();
  solve_cmd->add_option("--planner", planner_name)->check(CLI::IsMember({"lg", "baseline"}));
  solve_cmd->add_option("--seed", seed);
  solve_cmd->add_option("--budget", budget, "Total time budget, s");
  solve_cmd->add_flag("--deterministic", deterministic, "Iteration-based virtual clock");
  solve_cmd->add_option("--out", out, "Output directory");

  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark configuration");
  bench_cmd->add_option("config", config)->required();
  bench_cmd->add_flag("--paper-scale", paper_scale, "60 runs of 300 s");
  bench_cmd->add_flag("--deterministic", deterministic, "Iteration-based virtual clock");
  bench_cmd->add_option("--runs", runs);
  bench_cmd->add_option("--budget", budget, "Per-run budget, s");
  bench_cmd->add_option("--workers", workers);
  bench_cmd->add_option("--out", out, "Output directory");

  auto* render_cmd = app.add_subcommand("render", "Draw a scenario as SVG");
  render_cmd->add_option("scenario", scenario)->required();
  render_cmd->add_option("--trajectory", trajectory, "Trajectory file to overlay");
  render_cmd->add_option("--lead-order", lead_order, "Overlay the lead of this order");
  render_cmd->add_option("--seed", seed);
  render_cmd->add_option("-o,--output", svg, "SVG file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(scenario);
    if (*plans) return cmd_plans(scenario);
    if (*lead) return cmd_lead(scenario, order_index, seed, svg, lead_text);
    if (*solve_cmd) return cmd_solve(scenario, planner_name, seed, budget, deterministic, out);
    if (*bench_cmd)
      return cmd_bench(config, paper_scale, deterministic, runs, budget, workers,
                       bench_cmd->count("--out") ? out : std::string());
    if (*render_cmd) return cmd_render(scenario, trajectory, lead_order, seed, svg);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const stl::ParseError& e) {
    std::cerr << "formula error at " << e.position() << ": " << e.what() << "\n";
    return kExitValidation;
  } catch (const stl::FragmentError& e) {
    std::cerr << "formula error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const monitor::UnsupportedFormula& e) {
    std::cerr << "formula error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const geolead::NoPathError& e) {
    std::cerr << "no lead path: " << e.what() << "\n";
    return kExitNoSolution;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
