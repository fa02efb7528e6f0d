#include <gtest/gtest.h>

#include <vector>

#include "lgsst/geometry.hpp"

using namespace lgsst;

TEST(Geometry, PointSegmentDistanceClamps) {
  EXPECT_DOUBLE_EQ(point_segment_distance({5, 3}, {0, 0}, {10, 0}), 3.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({-3, 4}, {0, 0}, {10, 0}), 5.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({1, 1}, {1, 1}, {1, 1}), 0.0);
}

TEST(Geometry, SegmentsIntersect) {
  EXPECT_TRUE(segments_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  EXPECT_FALSE(segments_intersect({0, 0}, {1, 0}, {0, 1}, {1, 1}));
  // touching endpoint and collinear overlap both count
  EXPECT_TRUE(segments_intersect({0, 0}, {1, 0}, {1, 0}, {1, 1}));
  EXPECT_TRUE(segments_intersect({0, 0}, {2, 0}, {1, 0}, {3, 0}));
  EXPECT_FALSE(segments_intersect({0, 0}, {1, 0}, {2, 0}, {3, 0}));
}

TEST(Geometry, PolylineLengthAndDistance) {
  std::vector<Vec2> pts{{0, 0}, {3, 0}, {3, 4}};
  EXPECT_DOUBLE_EQ(polyline_length(pts), 7.0);
  EXPECT_DOUBLE_EQ(point_polyline_distance({4, 2}, pts), 1.0);
  std::vector<Vec2> single{{1, 1}};
  EXPECT_DOUBLE_EQ(point_polyline_distance({4, 5}, single), 5.0);
}

TEST(Geometry, SelfIntersection) {
  std::vector<Vec2> open{{0, 0}, {1, 0}, {2, 1}, {3, 0}};
  EXPECT_FALSE(polyline_self_intersects(open));
  std::vector<Vec2> loop{{0, 0}, {2, 0}, {2, 2}, {1, -1}};
  EXPECT_TRUE(polyline_self_intersects(loop));
  // consecutive segments share a vertex, that alone is not a crossing
  std::vector<Vec2> zig{{0, 0}, {1, 1}, {2, 0}, {3, 1}};
  EXPECT_FALSE(polyline_self_intersects(zig));
}
