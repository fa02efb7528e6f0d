#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "lgsst/planner.hpp"
#include "lgsst/scenario.hpp"
#include "lgsst/solve.hpp"
#include "lgsst/stl/print.hpp"

namespace lgsst::bench {

inline constexpr int kConfigSchema = 1;

struct BenchmarkConfig {
  std::vector<std::string> scenarios;
  std::vector<std::string> planners{"lg", "baseline"};
  int runs = 20;
  double budget = 60.0;        // per run, s
  double sample_period = 1.0;  // summary time grid, s
  std::string output = "bench_out";
  std::uint64_t seed = 1;
  int workers = 1;
  bool deterministic = false;

  void validate() const {
    if (scenarios.empty()) throw ValidationError("benchmark config lists no scenarios");
    if (runs < 1) throw ValidationError("runs must be >= 1");
    if (!(budget > 0.0)) throw ValidationError("budget must be positive");
    if (!(sample_period > 0.0)) throw ValidationError("sample period must be positive");
    if (workers < 1) throw ValidationError("workers must be >= 1");
    for (const auto& p : planners)
      if (p != "lg" && p != "baseline") throw ValidationError("unknown planner '" + p + "'");
  }

  /// 60 runs of 300 s each.
  void paper_scale() {
    runs = 60;
    budget = 300.0;
  }
};

inline BenchmarkConfig config_from_json(const nlohmann::json& j) {
  BenchmarkConfig c;
  try {
    if (j.value("schema", -1) != kConfigSchema) throw ValidationError("unsupported benchmark config schema");
    c.scenarios = j.at("scenarios").get<std::vector<std::string>>();
    if (j.contains("planners")) c.planners = j.at("planners").get<std::vector<std::string>>();
    c.runs = j.value("runs", c.runs);
    c.budget = j.value("budget", c.budget);
    c.sample_period = j.value("sample_period", c.sample_period);
    c.output = j.value("output", c.output);
    c.seed = j.value("seed", c.seed);
    c.workers = j.value("workers", c.workers);
    c.deterministic = j.value("deterministic", c.deterministic);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed benchmark config: ") + e.what());
  }
  c.validate();
  return c;
}

inline BenchmarkConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open benchmark config " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  BenchmarkConfig c = config_from_json(j);
  // Scenario paths are relative to the config file.
  const auto base = std::filesystem::path(path).parent_path();
  for (auto& s : c.scenarios)
    if (std::filesystem::path(s).is_relative()) s = (base / s).lexically_normal().string();
  return c;
}

struct RunMetrics {
  std::string planner;
  std::string scenario;
  int run = 0;
  std::uint64_t seed = 0;
  std::vector<planner::MetricSample> series;
  bool satisfied = false;
  double best_cost = std::numeric_limits<double>::infinity();
  std::size_t states = 0;
  double elapsed = 0.0;
  planner::Trajectory trajectory;
  std::size_t orders_tried = 0;
};

/// Guided run: the candidate-order pipeline. Series of the attempted orders
/// are concatenated; states accumulate across trees. Runs end at zero cost,
/// which is the floor of J.
inline RunMetrics run_guided(const Scenario& sc, double budget, std::uint64_t seed, bool deterministic) {
  SolveOptions opt;
  opt.budget = budget;
  opt.seed = seed;
  opt.deterministic = deterministic;
  opt.stop_on_satisfied = true;
  const SolveReport rep = solve(sc, opt);

  RunMetrics m;
  m.planner = "lg";
  m.seed = seed;
  m.elapsed = rep.elapsed;
  m.orders_tried = rep.attempts.size();
  std::uint64_t iter_offset = 0;
  std::size_t state_offset = 0;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : rep.attempts) {
    if (!a.result) continue;
    for (const auto& s : a.result->metrics) {
      best = std::min(best, s.best_cost);
      m.series.push_back({iter_offset + s.iteration, a.started + s.seconds, best, state_offset + s.states});
    }
    iter_offset += a.result->iterations;
    state_offset += a.result->states;
    if (a.result->best_cost < m.best_cost || m.trajectory.empty()) {
      if (a.result->best_cost < m.best_cost) m.best_cost = a.result->best_cost;
      m.trajectory = a.result->trajectory;
    }
  }
  if (m.series.empty()) m.series.push_back({0, 0.0, best, 0});
  m.states = state_offset;
  m.satisfied = rep.winner.has_value();
  if (const auto* w = rep.winning_result()) m.trajectory = w->trajectory;
  return m;
}

inline RunMetrics run_baseline(const Scenario& sc, double budget, std::uint64_t seed, bool deterministic) {
  planner::PlannerParams p = sc.planner;
  p.time_budget = budget;
  p.deterministic = deterministic;
  p.stop_on_satisfied = true;
  const monitor::MonitorTemplate tmpl(sc.formula);
  const planner::PlanResult r = planner::baseline_sst_stl(sc.problem(), tmpl, p, planner_seed(seed));
  RunMetrics m;
  m.planner = "baseline";
  m.seed = seed;
  m.series = r.metrics;
  m.satisfied = r.satisfied;
  m.best_cost = r.best_cost;
  m.states = r.states;
  m.elapsed = r.elapsed;
  m.trajectory = r.trajectory;
  return m;
}

/// Runs every (scenario, planner, run) cell on a worker pool. Results are
/// ordered by (scenario, planner, run index) regardless of scheduling.
inline std::vector<RunMetrics> run_benchmark(const BenchmarkConfig& cfg) {
  cfg.validate();
  std::vector<Scenario> scenarios;
  for (const auto& path : cfg.scenarios) scenarios.push_back(load_scenario(path));

  struct Job {
    std::size_t scenario;
    std::string planner;
    int run;
  };
  std::vector<Job> jobs;
  for (std::size_t s = 0; s < scenarios.size(); ++s)
    for (const auto& p : cfg.planners)
      for (int r = 0; r < cfg.runs; ++r) jobs.push_back({s, p, r});

  std::vector<RunMetrics> out(jobs.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        const Job& j = jobs[k];
        const Scenario& sc = scenarios[j.scenario];
        const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(j.run);
        RunMetrics m = j.planner == "lg" ? run_guided(sc, cfg.budget, seed, cfg.deterministic)
                                         : run_baseline(sc, cfg.budget, seed, cfg.deterministic);
        m.scenario = sc.name;
        m.run = j.run;
        out[k] = std::move(m);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int n = std::min<int>(cfg.workers, static_cast<int>(jobs.size()));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

inline std::string format_cost(double c) { return stl::format_number(c); }

/// Rows `run,seed,wall_s,best_cost,states,satisfied`, one per metric sample.
inline void write_csv(std::ostream& out, const std::vector<RunMetrics>& runs) {
  out << "run,seed,wall_s,best_cost,states,satisfied\n";
  for (const auto& r : runs)
    for (const auto& s : r.series)
      out << r.run << ',' << r.seed << ',' << stl::format_number(s.seconds) << ',' << format_cost(s.best_cost) << ','
          << s.states << ',' << (s.best_cost == 0.0 ? 1 : 0) << '\n';
}

/// Best cost of a run at time t (last sample at or before t).
inline double cost_at(const RunMetrics& r, double t) {
  double c = std::numeric_limits<double>::infinity();
  for (const auto& s : r.series) {
    if (s.seconds > t) break;
    c = s.best_cost;
  }
  return c;
}

inline double median(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct Curve {
  std::vector<double> t, mean, lo, hi, med;
};

/// Mean/min/max/median best cost over runs on a fixed time grid. Infinite
/// costs make the mean infinite.
inline Curve cost_curve(const std::vector<const RunMetrics*>& runs, double horizon, double period) {
  Curve c;
  const auto steps = static_cast<std::size_t>(std::floor(horizon / period + 1e-9));
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * period;
    std::vector<double> v;
    for (const auto* r : runs) v.push_back(cost_at(*r, t));
    double sum = 0.0;
    for (double x : v) sum += x;
    c.t.push_back(t);
    c.mean.push_back(sum / static_cast<double>(v.size()));
    c.lo.push_back(*std::min_element(v.begin(), v.end()));
    c.hi.push_back(*std::max_element(v.begin(), v.end()));
    c.med.push_back(median(v));
  }
  return c;
}

inline nlohmann::json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

inline nlohmann::json summarize(const BenchmarkConfig& cfg, const std::vector<RunMetrics>& runs) {
  nlohmann::json j;
  j["schema"] = 1;
  j["runs_per_planner"] = cfg.runs;
  j["budget_s"] = cfg.budget;
  j["deterministic"] = cfg.deterministic;
  j["groups"] = nlohmann::json::array();
  std::vector<std::pair<std::string, std::string>> keys;
  for (const auto& r : runs)
    if (std::find(keys.begin(), keys.end(), std::pair{r.scenario, r.planner}) == keys.end())
      keys.emplace_back(r.scenario, r.planner);
  for (const auto& [scenario, planner] : keys) {
    std::vector<const RunMetrics*> group;
    for (const auto& r : runs)
      if (r.scenario == scenario && r.planner == planner) group.push_back(&r);
    std::size_t sat = 0;
    std::vector<double> states, costs;
    for (const auto* r : group) {
      sat += r->satisfied;
      states.push_back(static_cast<double>(r->states));
      costs.push_back(r->best_cost);
    }
    const Curve c = cost_curve(group, cfg.budget, cfg.sample_period);
    nlohmann::json g;
    g["scenario"] = scenario;
    g["planner"] = planner;
    g["runs"] = group.size();
    g["satisfied"] = sat;
    g["satisfaction_rate"] = static_cast<double>(sat) / static_cast<double>(group.size());
    g["median_final_states"] = median(states);
    g["median_final_best_cost"] = number_or_null(median(costs));
    auto curve = nlohmann::json::array();
    for (std::size_t k = 0; k < c.t.size(); ++k)
      curve.push_back({{"t", c.t[k]}, {"mean", number_or_null(c.mean[k])}, {"median", number_or_null(c.med[k])}});
    g["best_cost_over_time"] = curve;
    j["groups"].push_back(g);
  }
  return j;
}

/// Writes `<scenario>_<planner>.csv` files and `summary.json` into the output directory.
inline void write_outputs(const BenchmarkConfig& cfg, const std::vector<RunMetrics>& runs, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::pair<std::string, std::string>> keys;
  for (const auto& r : runs)
    if (std::find(keys.begin(), keys.end(), std::pair{r.scenario, r.planner}) == keys.end())
      keys.emplace_back(r.scenario, r.planner);
  for (const auto& [scenario, planner] : keys) {
    std::vector<RunMetrics> group;
    for (const auto& r : runs)
      if (r.scenario == scenario && r.planner == planner) group.push_back(r);
    const auto path = std::filesystem::path(dir) / (scenario + "_" + planner + ".csv");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_csv(out, group);
  }
  const auto path = std::filesystem::path(dir) / "summary.json";
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << summarize(cfg, runs).dump(2) << '\n';
}

}  // namespace lgsst::bench
