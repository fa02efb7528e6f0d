#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace lgsst {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

/// Sign of the turn a -> b -> c: +1 left, -1 right, 0 collinear.
inline int orientation(Vec2 a, Vec2 b, Vec2 c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double s = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + s * ab);
}

/// Closed-segment intersection; touching and collinear overlap count.
inline bool segments_intersect(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
  auto on_segment = [](Vec2 a, Vec2 b, Vec2 c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
           c.y <= std::max(a.y, b.y);
  };
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

inline double polyline_length(std::span<const Vec2> pts) {
  double len = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) len += distance(pts[i - 1], pts[i]);
  return len;
}

/// Minimum distance from p to a polyline; a single point degenerates to point distance.
inline double point_polyline_distance(Vec2 p, std::span<const Vec2> pts) {
  if (pts.empty()) return INFINITY;
  if (pts.size() == 1) return distance(p, pts[0]);
  double best = INFINITY;
  for (std::size_t i = 1; i < pts.size(); ++i) best = std::min(best, point_segment_distance(p, pts[i - 1], pts[i]));
  return best;
}

/// True if any two non-adjacent segments of the polyline intersect.
inline bool polyline_self_intersects(std::span<const Vec2> input) {
  std::vector<Vec2> pts;
  pts.reserve(input.size());
  for (const Vec2& p : input)
    if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
  const std::size_t n = pts.size();
  if (n < 4) return false;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Vec2 a = pts[i], b = pts[i + 1];
    const double ax0 = std::min(a.x, b.x), ax1 = std::max(a.x, b.x);
    const double ay0 = std::min(a.y, b.y), ay1 = std::max(a.y, b.y);
    for (std::size_t j = i + 2; j + 1 < n; ++j) {
      const Vec2 c = pts[j], d = pts[j + 1];
      if (std::max(c.x, d.x) < ax0 || std::min(c.x, d.x) > ax1 || std::max(c.y, d.y) < ay0 ||
          std::min(c.y, d.y) > ay1)
        continue;
      if (segments_intersect(a, b, c, d)) return true;
    }
  }
  return false;
}

}  // namespace lgsst
