#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "lgsst/geometry.hpp"
#include "lgsst/world.hpp"

namespace lgsst {

/// Uniform bucket grid over the planar workspace, holding integer handles.
/// Queries take a distance functor that must be bounded below by the planar
/// distance of the handle's position to the query point.
class PlanarGrid {
public:
  using Handle = std::uint32_t;

  PlanarGrid(const Bounds& bounds, double cell) : bounds_(bounds), cell_(cell) {
    nx_ = std::max<int>(1, static_cast<int>(std::ceil(bounds.width() / cell)));
    ny_ = std::max<int>(1, static_cast<int>(std::ceil(bounds.height() / cell)));
    cells_.resize(static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_));
  }

  void insert(Handle h, Vec2 p) {
    cells_[index(p)].push_back(h);
    ++size_;
  }

  void erase(Handle h, Vec2 p) {
    auto& c = cells_[index(p)];
    auto it = std::find(c.begin(), c.end(), h);
    if (it == c.end()) return;
    *it = c.back();
    c.pop_back();
    --size_;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  /// Calls fn(h) for every handle in cells overlapping the disk (p, radius).
  template <typename Fn>
  void for_each_near(Vec2 p, double radius, Fn&& fn) const {
    const int x0 = col(p.x - radius), x1 = col(p.x + radius);
    const int y0 = row(p.y - radius), y1 = row(p.y + radius);
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x)
        for (Handle h : cells_[static_cast<std::size_t>(y) * nx_ + x]) fn(h);
  }

  /// Nearest handle under `dist`, searching rings of cells outward.
  template <typename Dist>
  bool nearest(Vec2 p, Dist&& dist, Handle& out, double& out_d) const {
    if (size_ == 0) return false;
    const int cx = col(p.x), cy = row(p.y);
    out_d = std::numeric_limits<double>::infinity();
    const int max_ring = std::max(nx_, ny_);
    for (int r = 0; r <= max_ring; ++r) {
      for (int y = cy - r; y <= cy + r; ++y) {
        if (y < 0 || y >= ny_) continue;
        const bool edge_row = (y == cy - r || y == cy + r);
        for (int x = cx - r; x <= cx + r; x += (edge_row ? 1 : 2 * r)) {
          if (x >= 0 && x < nx_)
            for (Handle h : cells_[static_cast<std::size_t>(y) * nx_ + x]) {
              const double d = dist(h);
              if (d < out_d || (d == out_d && h < out)) out_d = d, out = h;
            }
          if (r == 0) break;
        }
      }
      // Everything outside ring r is at least r * cell away in the plane,
      // minus the query's offset inside its own cell.
      if (out_d <= static_cast<double>(r) * cell_) return true;
    }
    return out_d < std::numeric_limits<double>::infinity();
  }

private:
  int col(double x) const { return std::clamp(static_cast<int>(std::floor((x - bounds_.x_min) / cell_)), 0, nx_ - 1); }
  int row(double y) const { return std::clamp(static_cast<int>(std::floor((y - bounds_.y_min) / cell_)), 0, ny_ - 1); }
  std::size_t index(Vec2 p) const { return static_cast<std::size_t>(row(p.y)) * nx_ + col(p.x); }

  Bounds bounds_;
  double cell_;
  int nx_ = 1, ny_ = 1;
  std::vector<std::vector<Handle>> cells_;
  std::size_t size_ = 0;
};

}  // namespace lgsst
