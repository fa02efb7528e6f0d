#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgsst/stl/fragment.hpp"

namespace lgsst::taskplan {

/// Visit order over goal identifiers (see FragmentSpec::region).
using PlanOrder = std::vector<std::size_t>;

class TooManyGoals : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// True iff the two windows share no interior point. Touching endpoints do
/// not overlap; an unbounded window overlaps everything.
inline bool no_time_overlap(const stl::TimeInterval& a, const stl::TimeInterval& b) {
  if (!a.bounded() || !b.bounded()) return false;
  return a.upper() <= b.lower() || b.upper() <= a.lower();
}

/// Pairs (i, j) meaning goal i must be visited before goal j.
inline std::vector<std::pair<std::size_t, std::size_t>> precedence_constraints(const stl::FragmentSpec& spec) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t nb = spec.bounded_goals.size();
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      if (i == j) continue;
      const auto& a = spec.bounded_goals[i].interval;
      const auto& b = spec.bounded_goals[j].interval;
      if (no_time_overlap(a, b) && a.upper() <= b.lower()) out.emplace_back(i, j);
    }
  return out;
}

/// All visit orders that respect every precedence constraint, in
/// lexicographic order. Orders are built by depth-first extension so
/// infeasible prefixes are cut early.
inline std::vector<PlanOrder> candidate_plans(const stl::FragmentSpec& spec, std::size_t max_goals = 8) {
  const std::size_t n = spec.goal_count();
  if (n > max_goals)
    throw TooManyGoals(std::to_string(n) + " goals exceed the enumeration cap of " + std::to_string(max_goals));

  // predecessors[j] = bitmask of goals that must come before j
  std::vector<unsigned> predecessors(n, 0u);
  for (auto [i, j] : precedence_constraints(spec)) predecessors[j] |= 1u << i;

  std::vector<PlanOrder> out;
  PlanOrder current;
  current.reserve(n);
  auto extend = [&](auto&& self, unsigned used) -> void {
    if (current.size() == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t g = 0; g < n; ++g) {
      if (used & (1u << g)) continue;
      if ((predecessors[g] & ~used) != 0u) continue;
      current.push_back(g);
      self(self, used | (1u << g));
      current.pop_back();
    }
  };
  extend(extend, 0u);
  return out;
}

}  // namespace lgsst::taskplan
