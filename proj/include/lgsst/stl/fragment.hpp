#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lgsst/stl/formula.hpp"
#include "lgsst/stl/print.hpp"

namespace lgsst::stl {

class FragmentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct BoundedGoal {
  DiskPredicate region;
  TimeInterval interval;
};

/// Reach-region goals of a formula of the form
///   AND_i F[a_i,b_i](x in G_i)  AND  AND_j F(x in G_j).
struct FragmentSpec {
  std::vector<BoundedGoal> bounded_goals;
  std::vector<DiskPredicate> unbounded_goals;

  std::size_t goal_count() const { return bounded_goals.size() + unbounded_goals.size(); }

  /// Goal identifiers: bounded goals first (0..nb-1), then unbounded.
  const DiskPredicate& region(std::size_t id) const {
    return id < bounded_goals.size() ? bounded_goals[id].region : unbounded_goals.at(id - bounded_goals.size());
  }
  TimeInterval interval(std::size_t id) const {
    return id < bounded_goals.size() ? bounded_goals[id].interval : TimeInterval::unbounded();
  }
  bool is_bounded(std::size_t id) const { return id < bounded_goals.size(); }
};

namespace detail {

inline void collect_goals(const Formula& f, FragmentSpec& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::And:
      collect_goals(f.lhs(), out);
      collect_goals(f.rhs(), out);
      return;
    case K::Eventually:
    case K::EventuallyUnbounded: {
      const Formula& body = f.child();
      if (body.kind() != K::Pred || !body.predicate().is_disk())
        throw FragmentError("not in the reach-region fragment: goal body must be a distance predicate in '" +
                            to_string(f) + "'");
      const DiskPredicate& disk = body.predicate().as_disk();
      if (f.kind() == K::EventuallyUnbounded || !f.interval().bounded()) {
        if (f.interval().lower() != 0.0)
          throw FragmentError("not in the reach-region fragment: unbounded goal must start at 0 in '" +
                              to_string(f) + "'");
        out.unbounded_goals.push_back(disk);
      } else {
        out.bounded_goals.push_back({disk, f.interval()});
      }
      return;
    }
    default:
      throw FragmentError("not in the reach-region fragment: unexpected subformula '" + to_string(f) + "'");
  }
}

}  // namespace detail

/// Splits a fragment formula into bounded and unbounded goals, each in textual
/// order. Throws FragmentError on anything outside the fragment, including
/// overlapping goal regions.
inline FragmentSpec extract_fragment(const Formula& phi) {
  FragmentSpec spec;
  detail::collect_goals(phi, spec);
  if (spec.goal_count() == 0) throw FragmentError("not in the reach-region fragment: no goals");
  const std::size_t n = spec.goal_count();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = spec.region(i);
      const auto& b = spec.region(j);
      if (distance(a.center, b.center) <= a.radius + b.radius)
        throw FragmentError("goal regions " + std::to_string(i) + " and " + std::to_string(j) + " are not disjoint");
    }
  return spec;
}

/// Rebuilds the canonical conjunction (bounded goals, then unbounded).
inline Formula fragment_formula(const FragmentSpec& spec) {
  std::vector<Formula> parts;
  for (const auto& g : spec.bounded_goals) parts.push_back(Formula::eventually(g.interval, Formula::pred(Predicate(g.region))));
  for (const auto& g : spec.unbounded_goals) parts.push_back(Formula::eventually(Formula::pred(Predicate(g))));
  Formula f = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) f = Formula::conj(f, parts[i]);
  return f;
}

}  // namespace lgsst::stl
