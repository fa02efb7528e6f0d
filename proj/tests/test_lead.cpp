#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "lgsst/lead.hpp"
#include "lgsst/rrt_star.hpp"
#include "lgsst/stl/parser.hpp"

using namespace lgsst;
using geolead::Disk;
using geolead::Layer;
using geolead::LeadPath;

namespace {

ConvexPolygon box(double x0, double x1, double y0, double y1) {
  return ConvexPolygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

Layer path_layer(int index, std::vector<Vec2> carrier) {
  Layer l;
  l.index = index;
  l.carrier = std::move(carrier);
  l.arc = {0.0};
  for (std::size_t i = 1; i < l.carrier.size(); ++i) l.arc.push_back(l.arc.back() + distance(l.carrier[i - 1], l.carrier[i]));
  return l;
}

Layer region_layer(int index, Disk d, Vec2 entry) {
  Layer l;
  l.index = index;
  l.region = true;
  l.disk = d;
  l.carrier = {entry};
  l.arc = {0.0};
  return l;
}

// start (0,0), one straight sub-path to a goal disk at (10,0)
LeadPath straight_lead() {
  return LeadPath({{0, 0}, {9.8, 0}},
                  {region_layer(0, {{0, 0}, 0.0}, {0, 0}), path_layer(1, {{0, 0}, {9.7, 0}}),
                   region_layer(2, {{10, 0}, 0.3}, {9.8, 0})});
}

stl::FragmentSpec experiment_one() {
  return stl::extract_fragment(stl::parse_formula("F (dist(x,y; 5,4) <= 0.3) & F (dist(x,y; 10,4) <= 0.3)"));
}

}  // namespace

TEST(RrtStar, StartInsideGoal) {
  std::mt19937_64 rng(1);
  const Workspace ws({0, 10, 0, 10}, {});
  const auto path = geolead::rrt_star(ws, {5, 5}, {{5, 5.1}, 0.3}, rng);
  ASSERT_EQ(path.size(), 1u);
  EXPECT_EQ(polyline_length(path), 0.0);
}

TEST(RrtStar, NearStraightInEmptySpace) {
  const Workspace ws({-2, 12, -3, 3}, {});
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    std::mt19937_64 rng(seed);
    const auto path = geolead::rrt_star(ws, {0, 0}, {{10, 0}, 0.3}, rng);
    const double lower = 10.0 - 0.3;
    EXPECT_GE(polyline_length(path), lower - 1e-9);
    EXPECT_LE(polyline_length(path), 1.05 * lower) << "seed " << seed;
    EXPECT_LT(distance(path.back(), {10, 0}), 0.3);
    for (std::size_t i = 1; i < path.size(); ++i) EXPECT_TRUE(ws.segment_free(path[i - 1], path[i]));
  }
}

TEST(RrtStar, EnclosedGoal) {
  std::mt19937_64 rng(1);
  const Workspace ws({0, 10, 0, 10}, {box(6, 9, 6, 6.5), box(6, 9, 8.5, 9), box(6, 6.5, 6.5, 8.5), box(8.5, 9, 6.5, 8.5)});
  EXPECT_THROW(geolead::rrt_star(ws, {1, 1}, {{7.5, 7.5}, 0.3}, rng), geolead::NoPathError);
}

TEST(BuildLead, LayerCounts) {
  const auto spec = experiment_one();
  const Workspace ws({0, 12, 0, 8}, {});
  const auto lead = geolead::build_lead({0, 1}, spec, ws, {1, 4}, 7);
  EXPECT_EQ(lead.layer_count(), 5);
  const auto spec1 = stl::extract_fragment(stl::parse_formula("F (dist(x,y; 5,4) <= 0.3)"));
  EXPECT_EQ(geolead::build_lead({0}, spec1, ws, {1, 4}, 7).layer_count(), 3);
  for (int l = 0; l < lead.layer_count(); ++l) {
    EXPECT_EQ(lead.layer(l).index, l);
    EXPECT_EQ(lead.layer(l).region, l % 2 == 0);
  }
}

TEST(BuildLead, VisitsGoalsInOrder) {
  const auto spec = experiment_one();
  const Workspace ws({0, 12, 0, 8}, {});
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto lead = geolead::build_lead({0, 1}, spec, ws, {1, 4}, seed);
    const auto& pts = lead.polyline();
    auto first_inside = [&](Vec2 c) {
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (distance(pts[i], c) < 0.3) return i;
      return pts.size();
    };
    const std::size_t a = first_inside({5, 4}), b = first_inside({10, 4});
    EXPECT_LT(a, pts.size());
    EXPECT_LT(b, pts.size());
    EXPECT_LT(a, b);
    // entry waypoints of the region layers lie in their disks
    EXPECT_LT(distance(lead.layer(2).carrier[0], {5, 4}), 0.3);
    EXPECT_LT(distance(lead.layer(4).carrier[0], {10, 4}), 0.3);
  }
}

TEST(BuildLead, SameSeedSameLead) {
  const auto spec = experiment_one();
  const Workspace ws({0, 12, 0, 8}, {box(7, 8, 2, 6)});
  const auto a = geolead::build_lead({1, 0}, spec, ws, {1, 4}, 3);
  const auto b = geolead::build_lead({1, 0}, spec, ws, {1, 4}, 3);
  EXPECT_EQ(a.polyline(), b.polyline());
}

TEST(BuildLead, ReportsUnreachableLeg) {
  const auto spec = experiment_one();
  const Workspace ws({0, 12, 0, 8}, {box(9, 11, 2.5, 3), box(9, 11, 5, 5.5), box(9, 9.5, 3, 5), box(10.5, 11, 3, 5)});
  geolead::RrtStarParams p;
  p.iterations = 800;
  EXPECT_THROW(geolead::build_lead({0, 1}, spec, ws, {1, 4}, 1, p), geolead::NoPathError);
}

TEST(LayerAssign, Examples) {
  const LeadPath lead = straight_lead();
  EXPECT_EQ(lead.layer_assign({0, 0}), 0);
  EXPECT_EQ(lead.layer_assign({9.8, 0}), 2);
  EXPECT_EQ(lead.layer_assign({5, 0.5}), 1);

  // equidistant to layers 1 and 2 goes to the lower index
  const LeadPath tie({{-10, 0}, {3, 0}}, {region_layer(0, {{-10, 0}, 0.0}, {-10, 0}), path_layer(1, {{0, 0}, {1, 0}}),
                                          region_layer(2, {{3, 0}, 0.0}, {3, 0})});
  EXPECT_DOUBLE_EQ(tie.dist_to_layer({2, 0}, 1), tie.dist_to_layer({2, 0}, 2));
  EXPECT_EQ(tie.layer_assign({2, 0}), 1);
}

TEST(LeadDistance, Examples) {
  const LeadPath lead = straight_lead();
  EXPECT_DOUBLE_EQ(lead.dist_to_lead({4, 0}), 0.0);
  EXPECT_DOUBLE_EQ(lead.dist_to_lead({5, 3}), 3.0);
  EXPECT_DOUBLE_EQ(lead.dist_to_lead({-3, 4}), 5.0);
  EXPECT_DOUBLE_EQ(lead.dist_to_layer({5, 3}, 1), 3.0);
  // region distance counts from the disk boundary
  EXPECT_NEAR(lead.dist_to_layer({10, 1}, 2), 0.7, 1e-12);
}

TEST(SampleNearLayer, StaysInTube) {
  const LeadPath lead = straight_lead();
  const Workspace ws({-2, 12, -3, 3}, {});
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10000; ++i) {
    const Vec2 p = lead.sample_near_layer(1, 1.0, ws, rng);
    ASSERT_LE(std::abs(p.y), 1.0);
    ASSERT_LE(lead.dist_to_layer(p, 1), 1.0 + 1e-12);
  }
  for (int i = 0; i < 1000; ++i) ASSERT_LE(distance(lead.sample_near_layer(2, 1.0, ws, rng), {10, 0}), 1.3 + 1e-12);
}

TEST(SampleNearLayer, RejectsObstacles) {
  const LeadPath lead = straight_lead();
  const Workspace ws({-2, 12, -3, 3}, {box(3, 4, 0.5, 1.5)});
  std::mt19937_64 rng(2);
  for (int i = 0; i < 5000; ++i) ASSERT_TRUE(ws.point_free(lead.sample_near_layer(1, 1.0, ws, rng)));
  const Workspace blocked({-2, 12, -3, 3}, {box(-1, 11, -2, 2)});
  EXPECT_THROW(lead.sample_near_layer(1, 1.0, blocked, rng), geolead::SamplingExhausted);
  EXPECT_THROW(lead.sample_near_layer(1, 0.0, ws, rng), std::invalid_argument);
}
