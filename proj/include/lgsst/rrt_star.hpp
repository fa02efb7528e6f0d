#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgsst/geometry.hpp"
#include "lgsst/world.hpp"

namespace lgsst::geolead {

class NoPathError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RrtStarParams {
  std::size_t iterations = 5000;
  double goal_bias = 0.05;
  double step = 0.5;         // maximum extension per iteration, m
  double rewire_cap = 1.5;   // upper bound of the shrinking neighbor radius, m
};

struct Disk {
  Vec2 center;
  double radius = 0.0;

  bool contains(Vec2 p) const { return distance(p, center) < radius; }
};

/// Planar RRT* from `start` to any point strictly inside `goal`. Returns the
/// lowest-cost waypoint sequence after the full iteration budget.
inline std::vector<Vec2> rrt_star(const Workspace& ws, Vec2 start, const Disk& goal, std::mt19937_64& rng,
                                  const RrtStarParams& params = {}) {
  if (goal.contains(start)) return {start};
  if (!ws.point_free(start)) throw NoPathError("RRT* start point is not collision-free");

  struct Node {
    Vec2 p;
    std::size_t parent;
    double cost;
    std::vector<std::size_t> children;
  };
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  const Bounds& b = ws.bounds();
  std::uniform_real_distribution<double> ux(b.x_min, b.x_max), uy(b.y_min, b.y_max), u01(0.0, 1.0);

  // Shrinking-ball constant for d = 2 with the free-space measure bounded by the box.
  const double gamma = 2.0 * std::sqrt(1.5) * std::sqrt(b.area() / std::numbers::pi) * 1.1;

  std::vector<Node> nodes;
  nodes.reserve(params.iterations + 1);
  nodes.push_back({start, kNone, 0.0, {}});
  std::size_t best_goal = kNone;
  std::vector<std::size_t> near;

  auto update_costs = [&](std::size_t root) {
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t k = stack.back();
      stack.pop_back();
      for (std::size_t c : nodes[k].children) {
        nodes[c].cost = nodes[k].cost + distance(nodes[k].p, nodes[c].p);
        stack.push_back(c);
      }
    }
  };

  for (std::size_t it = 0; it < params.iterations; ++it) {
    Vec2 target;
    if (u01(rng) < params.goal_bias) {
      const double r = goal.radius * std::sqrt(u01(rng));
      const double a = 2.0 * std::numbers::pi * u01(rng);
      target = {goal.center.x + r * std::cos(a), goal.center.y + r * std::sin(a)};
    } else {
      target = {ux(rng), uy(rng)};
    }

    std::size_t nearest = 0;
    double nearest_d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const double d = distance(nodes[k].p, target);
      if (d < nearest_d) nearest_d = d, nearest = k;
    }
    if (nearest_d == 0.0) continue;
    Vec2 p = target;
    if (nearest_d > params.step) p = nodes[nearest].p + (params.step / nearest_d) * (target - nodes[nearest].p);
    if (!ws.point_free(p) || !ws.segment_free(nodes[nearest].p, p)) continue;

    const double n = static_cast<double>(nodes.size() + 1);
    const double radius = std::min(gamma * std::sqrt(std::log(n) / n), params.rewire_cap);
    near.clear();
    for (std::size_t k = 0; k < nodes.size(); ++k)
      if (distance(nodes[k].p, p) <= radius) near.push_back(k);

    std::size_t parent = nearest;
    double cost = nodes[nearest].cost + distance(nodes[nearest].p, p);
    for (std::size_t k : near) {
      const double c = nodes[k].cost + distance(nodes[k].p, p);
      if (c < cost && ws.segment_free(nodes[k].p, p)) parent = k, cost = c;
    }
    const std::size_t id = nodes.size();
    nodes.push_back({p, parent, cost, {}});
    nodes[parent].children.push_back(id);

    for (std::size_t k : near) {
      if (k == parent) continue;
      const double c = cost + distance(p, nodes[k].p);
      if (c < nodes[k].cost && ws.segment_free(p, nodes[k].p)) {
        auto& siblings = nodes[nodes[k].parent].children;
        siblings.erase(std::find(siblings.begin(), siblings.end(), k));
        nodes[k].parent = id;
        nodes[k].cost = c;
        nodes[id].children.push_back(k);
        update_costs(k);
      }
    }

    if (goal.contains(p) && (best_goal == kNone || cost < nodes[best_goal].cost)) best_goal = id;
  }

  if (best_goal == kNone) throw NoPathError("RRT* found no path to the goal region within the iteration budget");

  // Rewiring may have lowered the cost of another goal node.
  for (std::size_t k = 0; k < nodes.size(); ++k)
    if (goal.contains(nodes[k].p) && nodes[k].cost < nodes[best_goal].cost) best_goal = k;

  std::vector<Vec2> path;
  for (std::size_t k = best_goal; k != kNone; k = nodes[k].parent) path.push_back(nodes[k].p);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace lgsst::geolead
