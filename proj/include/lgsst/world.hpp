#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgsst/geometry.hpp"

namespace lgsst {

class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Bounds {
  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;

  bool contains(Vec2 p) const { return x_min <= p.x && p.x <= x_max && y_min <= p.y && p.y <= y_max; }
  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
};

/// Convex polygon with counterclockwise vertices. Boundary points count as inside.
class ConvexPolygon {
public:
  explicit ConvexPolygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw ValidationError("obstacle polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2 a = vertices_[i], b = vertices_[(i + 1) % n], c = vertices_[(i + 2) % n];
      if (cross(b - a, c - b) <= 0.0) throw ValidationError("obstacle polygon must be convex and counterclockwise");
    }
    lo_ = hi_ = vertices_[0];
    for (const Vec2& v : vertices_) {
      lo_ = {std::min(lo_.x, v.x), std::min(lo_.y, v.y)};
      hi_ = {std::max(hi_.x, v.x), std::max(hi_.y, v.y)};
    }
  }

  const std::vector<Vec2>& vertices() const { return vertices_; }

  Vec2 centroid() const {
    Vec2 c;
    for (const Vec2& v : vertices_) c = c + v;
    return (1.0 / static_cast<double>(vertices_.size())) * c;
  }

  bool contains(Vec2 p) const {
    if (p.x < lo_.x || p.x > hi_.x || p.y < lo_.y || p.y > hi_.y) return false;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i)
      if (cross(vertices_[(i + 1) % n] - vertices_[i], p - vertices_[i]) < 0.0) return false;
    return true;
  }

  bool intersects_segment(Vec2 p, Vec2 q) const {
    if (std::max(p.x, q.x) < lo_.x || std::min(p.x, q.x) > hi_.x || std::max(p.y, q.y) < lo_.y ||
        std::min(p.y, q.y) > hi_.y)
      return false;
    if (contains(p) || contains(q)) return true;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i)
      if (segments_intersect(p, q, vertices_[i], vertices_[(i + 1) % n])) return true;
    return false;
  }

  /// Euclidean distance from p to the polygon (0 inside).
  double distance_to(Vec2 p) const {
    if (contains(p)) return 0.0;
    double best = INFINITY;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) best = std::min(best, point_segment_distance(p, vertices_[i], vertices_[(i + 1) % n]));
    return best;
  }

  Vec2 min_corner() const { return lo_; }
  Vec2 max_corner() const { return hi_; }

private:
  std::vector<Vec2> vertices_;
  Vec2 lo_, hi_;
};

class Workspace {
public:
  Workspace(Bounds bounds, std::vector<ConvexPolygon> obstacles) : bounds_(bounds), obstacles_(std::move(obstacles)) {
    if (!(bounds_.x_max > bounds_.x_min) || !(bounds_.y_max > bounds_.y_min))
      throw ValidationError("workspace bounds are degenerate");
    for (const auto& o : obstacles_)
      for (const Vec2& v : o.vertices())
        if (!bounds_.contains(v)) throw ValidationError("obstacle vertex lies outside the workspace bounds");
  }

  const Bounds& bounds() const { return bounds_; }
  const std::vector<ConvexPolygon>& obstacles() const { return obstacles_; }

  bool point_free(Vec2 p) const {
    if (!bounds_.contains(p)) return false;
    for (const auto& o : obstacles_)
      if (o.contains(p)) return false;
    return true;
  }

  bool segment_free(Vec2 p, Vec2 q) const {
    if (!bounds_.contains(p) || !bounds_.contains(q)) return false;
    for (const auto& o : obstacles_)
      if (o.intersects_segment(p, q)) return false;
    return true;
  }

  /// True if the closed disk touches no obstacle.
  bool disk_free(Vec2 c, double r) const {
    for (const auto& o : obstacles_)
      if (o.distance_to(c) <= r) return false;
    return true;
  }

private:
  Bounds bounds_;
  std::vector<ConvexPolygon> obstacles_;
};

}  // namespace lgsst
