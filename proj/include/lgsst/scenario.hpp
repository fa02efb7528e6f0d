#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lgsst/dynamics.hpp"
#include "lgsst/monitor.hpp"
#include "lgsst/planner.hpp"
#include "lgsst/rrt_star.hpp"
#include "lgsst/stl/fragment.hpp"
#include "lgsst/stl/parser.hpp"
#include "lgsst/stl/print.hpp"
#include "lgsst/world.hpp"

namespace lgsst {

inline constexpr int kScenarioSchema = 1;

/// Everything one planning problem needs. Loaded from versioned JSON.
struct Scenario {
  std::string name;
  bool reconstructed = false;  // geometry rebuilt from a textual description, not original data
  Bounds bounds;
  std::vector<ConvexPolygon> obstacles;
  dynamics::CarState x_init;
  stl::Formula formula = stl::Formula::truth();
  dynamics::CarParams car;
  planner::PlannerParams planner;
  geolead::RrtStarParams lead;
  std::uint64_t seed = 1;

  Workspace workspace() const { return Workspace(bounds, obstacles); }
  planner::Problem problem() const { return {workspace(), car, x_init}; }
  stl::FragmentSpec fragment() const { return stl::extract_fragment(formula); }
};

namespace detail {

using nlohmann::json;

template <typename T>
void read_opt(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

inline Vec2 read_point(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ValidationError("point must be [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace detail

/// Parses and validates a scenario document. Throws ValidationError (and
/// stl::ParseError / stl::FragmentError for the formula).
inline Scenario scenario_from_json(const nlohmann::json& j) {
  using detail::read_opt;
  Scenario s;
  try {
    if (!j.is_object()) throw ValidationError("scenario must be a JSON object");
    const int schema = j.value("schema", -1);
    if (schema != kScenarioSchema)
      throw ValidationError("unsupported scenario schema " + std::to_string(schema) + " (expected " +
                            std::to_string(kScenarioSchema) + ")");
    s.name = j.value("name", std::string("scenario"));
    s.reconstructed = j.value("reconstructed", false);

    const auto& ws = j.at("workspace");
    const auto& b = ws.at("bounds");
    if (!b.is_array() || b.size() != 4) throw ValidationError("bounds must be [x_min, x_max, y_min, y_max]");
    s.bounds = {b[0].get<double>(), b[1].get<double>(), b[2].get<double>(), b[3].get<double>()};
    if (ws.contains("obstacles"))
      for (const auto& poly : ws.at("obstacles")) {
        std::vector<Vec2> v;
        for (const auto& p : poly) v.push_back(detail::read_point(p));
        s.obstacles.emplace_back(std::move(v));
      }

    const auto& x0 = j.at("x_init");
    if (!x0.is_array() || x0.size() != 3) throw ValidationError("x_init must be [x, y, theta]");
    s.x_init = {x0[0].get<double>(), x0[1].get<double>(), x0[2].get<double>()};
    s.formula = stl::parse_formula(j.at("formula").get<std::string>());

    if (j.contains("car")) {
      const auto& c = j.at("car");
      read_opt(c, "wheelbase", s.car.wheelbase);
      read_opt(c, "v_min", s.car.v_min);
      read_opt(c, "v_max", s.car.v_max);
      read_opt(c, "delta_max", s.car.delta_max);
    }
    if (j.contains("planner")) {
      const auto& p = j.at("planner");
      read_opt(p, "sampler_radius", s.planner.sampler_radius);
      read_opt(p, "propagation_radius", s.planner.propagation_radius);
      read_opt(p, "max_duration", s.planner.max_duration);
      read_opt(p, "max_iterations", s.planner.max_iterations);
      read_opt(p, "time_budget", s.planner.time_budget);
      read_opt(p, "selection_radius", s.planner.selection_radius);
      read_opt(p, "pruning_radius", s.planner.pruning_radius);
      read_opt(p, "goal_epsilon", s.planner.goal_epsilon);
      read_opt(p, "heading_weight", s.planner.heading_weight);
      read_opt(p, "dt", s.planner.dt);
      read_opt(p, "layer_restricted_selection", s.planner.layer_restricted_selection);
      read_opt(p, "virtual_iteration_seconds", s.planner.virtual_iteration_seconds);
      read_opt(p, "metrics_period", s.planner.metrics_period);
    }
    if (j.contains("lead")) {
      const auto& l = j.at("lead");
      read_opt(l, "iterations", s.lead.iterations);
      read_opt(l, "goal_bias", s.lead.goal_bias);
      read_opt(l, "step", s.lead.step);
      read_opt(l, "rewire_cap", s.lead.rewire_cap);
    }
    read_opt(j, "seed", s.seed);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed scenario: ") + e.what());
  }

  s.car.validate();
  s.planner.validate();
  const Workspace ws = s.workspace();
  if (!ws.point_free(s.x_init.position())) throw ValidationError("x_init is not collision-free");
  const stl::FragmentSpec frag = s.fragment();
  monitor::MonitorTemplate check(s.formula);  // throws if unsupported
  for (std::size_t g = 0; g < frag.goal_count(); ++g) {
    const auto& r = frag.region(g);
    if (!s.bounds.contains(r.center)) throw ValidationError("goal " + std::to_string(g) + " centre is outside the workspace");
    if (!ws.disk_free(r.center, r.radius)) throw ValidationError("goal " + std::to_string(g) + " region overlaps an obstacle");
    const auto iv = frag.interval(g);
    if (iv.bounded() && s.planner.max_duration > iv.width())
      throw ValidationError("max propagation duration exceeds the width of goal window " + std::to_string(g));
  }
  if (!(s.lead.goal_bias >= 0.0 && s.lead.goal_bias <= 1.0)) throw ValidationError("lead goal bias must lie in [0, 1]");
  if (!(s.lead.step > 0.0) || !(s.lead.rewire_cap > 0.0)) throw ValidationError("lead step and rewire cap must be positive");
  return s;
}

inline nlohmann::json scenario_to_json(const Scenario& s) {
  nlohmann::json j;
  j["schema"] = kScenarioSchema;
  j["name"] = s.name;
  j["reconstructed"] = s.reconstructed;
  j["workspace"]["bounds"] = {s.bounds.x_min, s.bounds.x_max, s.bounds.y_min, s.bounds.y_max};
  auto obstacles = nlohmann::json::array();
  for (const auto& o : s.obstacles) {
    auto poly = nlohmann::json::array();
    for (const Vec2& v : o.vertices()) poly.push_back({v.x, v.y});
    obstacles.push_back(poly);
  }
  j["workspace"]["obstacles"] = obstacles;
  j["x_init"] = {s.x_init.x, s.x_init.y, s.x_init.theta};
  j["formula"] = stl::to_string(s.formula);
  j["car"] = {{"wheelbase", s.car.wheelbase}, {"v_min", s.car.v_min}, {"v_max", s.car.v_max}, {"delta_max", s.car.delta_max}};
  const auto& p = s.planner;
  j["planner"] = {{"sampler_radius", p.sampler_radius},
                  {"propagation_radius", p.propagation_radius},
                  {"max_duration", p.max_duration},
                  {"max_iterations", p.max_iterations},
                  {"time_budget", p.time_budget},
                  {"selection_radius", p.selection_radius},
                  {"pruning_radius", p.pruning_radius},
                  {"goal_epsilon", p.goal_epsilon},
                  {"heading_weight", p.heading_weight},
                  {"dt", p.dt},
                  {"layer_restricted_selection", p.layer_restricted_selection},
                  {"virtual_iteration_seconds", p.virtual_iteration_seconds},
                  {"metrics_period", p.metrics_period}};
  j["lead"] = {{"iterations", s.lead.iterations},
               {"goal_bias", s.lead.goal_bias},
               {"step", s.lead.step},
               {"rewire_cap", s.lead.rewire_cap}};
  j["seed"] = s.seed;
  return j;
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return scenario_from_json(j);
}

inline void save_scenario(const Scenario& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << scenario_to_json(s).dump(2) << '\n';
}

}  // namespace lgsst
