#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgsst/geometry.hpp"
#include "lgsst/rrt_star.hpp"
#include "lgsst/stl/fragment.hpp"
#include "lgsst/taskplan.hpp"
#include "lgsst/world.hpp"

namespace lgsst::geolead {

class SamplingExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One layer of the lead. Even layers are regions (the start point or a goal
/// disk, carried by its entry waypoint); odd layers are the connecting
/// sub-paths, carried by the sub-path clipped to outside both end regions.
struct Layer {
  int index = 0;
  bool region = false;
  std::size_t first = 0;  // waypoint range [first, last] of the polyline
  std::size_t last = 0;
  Disk disk;                    // region layers only
  std::vector<Vec2> carrier;    // entry waypoint, or clipped sub-path
  std::vector<double> arc;      // cumulative arc length along the carrier

  double distance_to(Vec2 p) const {
    const double along = point_polyline_distance(p, carrier);
    if (!region) return along;
    return std::min(along, std::max(0.0, distance(p, disk.center) - disk.radius));
  }
};

class LeadPath {
public:
  LeadPath() = default;
  LeadPath(std::vector<Vec2> polyline, std::vector<Layer> layers)
      : polyline_(std::move(polyline)), layers_(std::move(layers)) {}

  const std::vector<Vec2>& polyline() const { return polyline_; }
  const std::vector<Layer>& layers() const { return layers_; }
  int layer_count() const { return static_cast<int>(layers_.size()); }
  const Layer& layer(int l) const { return layers_.at(static_cast<std::size_t>(l)); }

  double dist_to_lead(Vec2 p) const { return point_polyline_distance(p, polyline_); }
  double dist_to_layer(Vec2 p, int l) const { return layer(l).distance_to(p); }

  /// Nearest layer; ties go to the lower index.
  int layer_assign(Vec2 p) const {
    int best = 0;
    double best_d = INFINITY;
    for (const Layer& l : layers_) {
      const double d = l.distance_to(p);
      if (d < best_d) best_d = d, best = l.index;
    }
    return best;
  }

  /// Collision-free point within s_r of layer l: uniform position along the
  /// carrier plus a uniform offset in a disk of radius s_r.
  Vec2 sample_near_layer(int l, double s_r, const Workspace& ws, std::mt19937_64& rng,
                         std::size_t max_attempts = 1000) const {
    if (!(s_r > 0.0)) throw std::invalid_argument("sampler radius must be positive");
    const Layer& layer = this->layer(l);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
      Vec2 base;
      double radius = s_r;
      if (layer.region) {
        base = layer.disk.center;
        radius = layer.disk.radius + s_r;
      } else {
        base = point_at(layer, u01(rng) * layer.arc.back());
      }
      const double r = radius * std::sqrt(u01(rng));
      const double a = 2.0 * std::numbers::pi * u01(rng);
      const Vec2 p{base.x + r * std::cos(a), base.y + r * std::sin(a)};
      if (ws.point_free(p)) return p;
    }
    throw SamplingExhausted("no collision-free sample near layer " + std::to_string(l));
  }

private:
  static Vec2 point_at(const Layer& layer, double s) {
    const auto& c = layer.carrier;
    if (c.size() == 1) return c.front();
    auto it = std::upper_bound(layer.arc.begin(), layer.arc.end(), s);
    std::size_t k = static_cast<std::size_t>(it - layer.arc.begin());
    k = std::clamp<std::size_t>(k, 1, c.size() - 1);
    const double seg = layer.arc[k] - layer.arc[k - 1];
    const double f = seg > 0.0 ? (s - layer.arc[k - 1]) / seg : 0.0;
    return c[k - 1] + std::clamp(f, 0.0, 1.0) * (c[k] - c[k - 1]);
  }

  std::vector<Vec2> polyline_;
  std::vector<Layer> layers_;
};

namespace detail {

// Parameter s in [0,1] where segment a->b crosses the circle, a inside/b outside or vice versa.
inline double circle_crossing(Vec2 a, Vec2 b, const Disk& d) {
  const Vec2 ab = b - a, ca = a - d.center;
  const double A = dot(ab, ab), B = 2.0 * dot(ca, ab), C = dot(ca, ca) - d.radius * d.radius;
  if (A == 0.0) return 0.0;
  const double disc = std::max(0.0, B * B - 4.0 * A * C);
  const double s1 = (-B - std::sqrt(disc)) / (2.0 * A);
  const double s2 = (-B + std::sqrt(disc)) / (2.0 * A);
  if (s1 >= 0.0 && s1 <= 1.0) return s1;
  return std::clamp(s2, 0.0, 1.0);
}

/// Portion of a leg between leaving `from` and first entering `to`.
inline std::vector<Vec2> clip_leg(const std::vector<Vec2>& leg, const Disk& from, const Disk& to) {
  if (leg.size() < 2) return leg;
  auto inside = [](const Disk& d, Vec2 p) { return d.radius > 0.0 && distance(p, d.center) < d.radius; };
  std::size_t k = 0;
  while (k + 1 < leg.size() && inside(from, leg[k + 1])) ++k;
  if (k + 1 == leg.size()) return leg;
  std::vector<Vec2> out;
  Vec2 start = leg[k];
  if (inside(from, leg[k])) {
    const double s = circle_crossing(leg[k], leg[k + 1], from);
    start = leg[k] + s * (leg[k + 1] - leg[k]);
  }
  out.push_back(start);
  for (std::size_t m = k + 1; m < leg.size(); ++m) {
    if (inside(to, leg[m])) {
      const double s = circle_crossing(leg[m - 1], leg[m], to);
      out.push_back(leg[m - 1] + s * (leg[m] - leg[m - 1]));
      break;
    }
    out.push_back(leg[m]);
  }
  if (polyline_length(out) <= 0.0) return leg;
  return out;
}

inline std::vector<double> arc_lengths(const std::vector<Vec2>& pts) {
  std::vector<double> arc(pts.size(), 0.0);
  for (std::size_t i = 1; i < pts.size(); ++i) arc[i] = arc[i - 1] + distance(pts[i - 1], pts[i]);
  return arc;
}

}  // namespace detail

/// Lead path through the start point and the goals in `order`. Leg i uses an
/// RNG seeded with seed + i. Produces 2n - 1 layers for n regions (start
/// included).
inline LeadPath build_lead(const taskplan::PlanOrder& order, const stl::FragmentSpec& spec, const Workspace& ws,
                           Vec2 x_init, std::uint64_t seed, const RrtStarParams& params = {}) {
  std::vector<Vec2> polyline{x_init};
  std::vector<Layer> layers;

  Layer start;
  start.index = 0;
  start.region = true;
  start.disk = {x_init, 0.0};
  start.carrier = {x_init};
  start.arc = {0.0};
  layers.push_back(start);

  Disk previous{x_init, 0.0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& region = spec.region(order[i]);
    const Disk goal{region.center, region.radius};
    std::mt19937_64 rng(seed + i);
    std::vector<Vec2> leg;
    try {
      leg = rrt_star(ws, polyline.back(), goal, rng, params);
    } catch (const NoPathError& e) {
      throw NoPathError("lead leg " + std::to_string(i) + " (to goal " + std::to_string(order[i]) + "): " + e.what());
    }

    const std::size_t first = polyline.size() - 1;
    polyline.insert(polyline.end(), leg.begin() + 1, leg.end());
    const std::size_t junction = polyline.size() - 1;

    Layer path;
    path.index = static_cast<int>(2 * i + 1);
    path.first = first;
    path.last = junction;
    path.carrier = detail::clip_leg(leg, previous, goal);
    path.arc = detail::arc_lengths(path.carrier);
    layers.push_back(std::move(path));

    Layer reg;
    reg.index = static_cast<int>(2 * i + 2);
    reg.region = true;
    reg.first = reg.last = junction;
    reg.disk = goal;
    reg.carrier = {polyline.back()};
    reg.arc = {0.0};
    layers.push_back(std::move(reg));
    previous = goal;
  }
  return LeadPath(std::move(polyline), std::move(layers));
}

}  // namespace lgsst::geolead
