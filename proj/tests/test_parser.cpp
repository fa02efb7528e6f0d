#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "lgsst/stl/fragment.hpp"
#include "lgsst/stl/parser.hpp"
#include "lgsst/stl/print.hpp"

using namespace lgsst;
using namespace lgsst::stl;

TEST(Parser, BoundedDiskGoal) {
  const Formula f = parse_formula("F[0,3](dist(x,y; 0.5,4) <= 0.3)");
  ASSERT_EQ(f.kind(), Formula::Kind::Eventually);
  EXPECT_EQ(f.interval(), TimeInterval(0, 3));
  ASSERT_EQ(f.child().kind(), Formula::Kind::Pred);
  EXPECT_EQ(f.child().predicate(), Predicate::disk({0.5, 4}, 0.3));
}

TEST(Parser, TrueConstant) { EXPECT_EQ(parse_formula("true").kind(), Formula::Kind::True); }

TEST(Parser, IntervalViolation) {
  try {
    parse_formula("F[3,1](x >= 0)");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::Interval);
  }
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse_formula(""), ParseError);
  EXPECT_THROW(parse_formula("F[0,1] (x >= 0"), ParseError);
  EXPECT_THROW(parse_formula("x >= 0 extra"), ParseError);
  EXPECT_THROW(parse_formula("dist(x,y; 1,1) >= 2"), ParseError);
  EXPECT_THROW(parse_formula("dist(x,y; 1,1) <= 0"), ParseError);
  EXPECT_THROW(parse_formula("G (x >= 0)"), ParseError);
  try {
    parse_formula("speed >= 1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::UnknownIdentifier);
    EXPECT_EQ(e.position(), 0u);
  }
}

TEST(Parser, LinearPredicates) {
  const Formula f = parse_formula("2*x - y + 1 < 3");
  ASSERT_EQ(f.kind(), Formula::Kind::Pred);
  const auto& lin = std::get<LinearPredicate>(f.predicate().form());
  EXPECT_EQ(lin.coefficients, (std::vector<double>{2, -1}));
  // trailing zero coefficients are trimmed
  EXPECT_DOUBLE_EQ(lin.threshold, 2.0);
  EXPECT_EQ(lin.relation, Relation::Less);
}

TEST(Parser, Precedence) {
  // & binds tighter than |; U binds tighter than &
  const Formula f = parse_formula("x >= 0 | y >= 0 & theta >= 0");
  ASSERT_EQ(f.kind(), Formula::Kind::Or);
  EXPECT_EQ(f.rhs().kind(), Formula::Kind::And);
  const Formula g = parse_formula("x >= 0 U[0,2] y >= 1 & true");
  ASSERT_EQ(g.kind(), Formula::Kind::And);
  EXPECT_EQ(g.lhs().kind(), Formula::Kind::Until);
  EXPECT_EQ(parse_formula("F (x >= 1)").kind(), Formula::Kind::EventuallyUnbounded);
  EXPECT_EQ(parse_formula("!!true").child().child().kind(), Formula::Kind::True);
}

TEST(Parser, RoundTrip) {
  const std::vector<std::string> inputs{
      "F[0,3] (dist(x,y; 0.5,4) <= 0.3) & F[6,20] (dist(x,y; 5,4) <= 0.3)",
      "G[0,1.5] !(x < -2.25) | (y >= 0 U[1,2] theta > 0.1)",
      "F (dist(x,y; 10,4) < 0.3)",
      "F[2,inf] (x + 2*y <= 7)",
      "true & false",
  };
  for (const auto& text : inputs) {
    const Formula once = parse_formula(text);
    EXPECT_EQ(parse_formula(to_string(once)), once) << text;
  }
}

TEST(Fragment, ExperimentOneGoals) {
  const auto spec =
      extract_fragment(parse_formula("F (dist(x,y; 5,4) <= 0.3) & F (dist(x,y; 10,4) <= 0.3)"));
  EXPECT_EQ(spec.bounded_goals.size(), 0u);
  ASSERT_EQ(spec.unbounded_goals.size(), 2u);
  EXPECT_EQ(spec.unbounded_goals[0].center, (Vec2{5, 4}));
  EXPECT_EQ(spec.unbounded_goals[1].center, (Vec2{10, 4}));
  EXPECT_DOUBLE_EQ(spec.unbounded_goals[0].radius, 0.3);
}

TEST(Fragment, ExperimentTwoIntervals) {
  const auto spec = extract_fragment(parse_formula(
      "F[0,3] (dist(x,y; 0.5,4) <= 0.3) & F[6,20] (dist(x,y; 5,4) <= 0.3) & "
      "F[20,40] (dist(x,y; 10,4) <= 0.3) & F[35,65] (dist(x,y; 10,1) <= 0.3)"));
  ASSERT_EQ(spec.bounded_goals.size(), 4u);
  const std::vector<TimeInterval> want{{0, 3}, {6, 20}, {20, 40}, {35, 65}};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(spec.bounded_goals[i].interval, want[i]);
  EXPECT_TRUE(spec.unbounded_goals.empty());
}

TEST(Fragment, Rejections) {
  EXPECT_THROW(extract_fragment(parse_formula("true")), FragmentError);
  EXPECT_THROW(extract_fragment(parse_formula("G[0,1] (dist(x,y; 1,1) <= 1)")), FragmentError);
  EXPECT_THROW(extract_fragment(parse_formula("F[0,1] (x >= 1)")), FragmentError);
  EXPECT_THROW(extract_fragment(parse_formula("F[0,1] (dist(x,y; 1,1) <= 1) | F (dist(x,y; 2,2) <= 1)")),
               FragmentError);
}

TEST(Fragment, RebuildsFormula) {
  const Formula f = parse_formula("F[1,2] (dist(x,y; 1,1) <= 0.5) & F (dist(x,y; 3,3) <= 0.25)");
  const auto spec = extract_fragment(f);
  const auto again = extract_fragment(fragment_formula(spec));
  ASSERT_EQ(again.goal_count(), 2u);
  EXPECT_EQ(again.bounded_goals[0].interval, TimeInterval(1, 2));
  EXPECT_EQ(again.unbounded_goals[0], spec.unbounded_goals[0]);
}
