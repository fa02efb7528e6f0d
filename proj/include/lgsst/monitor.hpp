#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lgsst/stl/formula.hpp"
#include "lgsst/stl/print.hpp"

namespace lgsst::monitor {

/// Partial robustness of one temporal operator; nullopt plays the role of
/// the "no value yet" symbol.
using SlotValue = std::optional<double>;

/// One partial-robustness value per temporal operator of the template.
struct Annotation {
  std::vector<SlotValue> slots;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

class UnsupportedFormula : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Syntax tree of a reach-region formula with one annotation slot per
/// eventually operator. Supports conjunctions of F[a,b]/F over state
/// formulas built from predicates, true and conjunction.
class MonitorTemplate {
public:
  explicit MonitorTemplate(const stl::Formula& phi) { root_ = build(phi); }

  std::size_t slot_count() const { return slots_.size(); }
  const stl::TimeInterval& slot_interval(std::size_t i) const { return slots_[i].interval; }
  bool slot_bounded(std::size_t i) const { return slots_[i].bounded; }

  /// Robustness of the body of slot i at a single state.
  double body_value(std::size_t i, std::span<const double> state) const { return state_value(slots_[i].body, state); }

  Annotation annotate_root(std::span<const double> state, double t = 0.0) const {
    Annotation a;
    a.slots.resize(slots_.size());
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      const Slot& s = slots_[i];
      if (!s.bounded || s.interval.contains(t)) a.slots[i] = state_value(s.body, state);
    }
    return a;
  }

  /// Folds one new observation (state at time t) into `ann` in place.
  /// Outside a bounded window the previous value is carried forward.
  void advance(Annotation& ann, std::span<const double> state, double t) const {
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      const Slot& s = slots_[i];
      if (s.bounded && !s.interval.contains(t)) continue;
      const double v = state_value(s.body, state);
      SlotValue& slot = ann.slots[i];
      slot = slot ? std::max(*slot, v) : v;
    }
  }

  Annotation annotate_child(const Annotation& parent, std::span<const double> state, double t) const {
    Annotation a = parent;
    advance(a, state, t);
    return a;
  }

  /// Folds the slots through the conjunction tree; unobserved slots are skipped.
  SlotValue fold(const Annotation& ann) const { return fold_node(root_, ann); }

  /// Non-negative cost -min(fold, 0); zero when nothing is observed yet.
  double node_cost(const Annotation& ann) const {
    const SlotValue v = fold(ann);
    return v && *v < 0.0 ? -*v : 0.0;
  }

  std::size_t unobserved(const Annotation& ann) const {
    return static_cast<std::size_t>(std::count(ann.slots.begin(), ann.slots.end(), std::nullopt));
  }

  bool complete(const Annotation& ann) const { return unobserved(ann) == 0; }

  bool is_satisfied(const Annotation& ann) const {
    if (!complete(ann)) return false;
    const SlotValue v = fold(ann);
    return v && *v >= 0.0;
  }

private:
  struct Slot {
    bool bounded = false;
    stl::TimeInterval interval;
    stl::Formula body;
  };

  // Internal tree: either a slot reference or a conjunction of two subtrees.
  struct TreeNode {
    int slot = -1;
    int left = -1;
    int right = -1;
  };

  static void check_state_formula(const stl::Formula& f) {
    using K = stl::Formula::Kind;
    switch (f.kind()) {
      case K::True:
      case K::Pred: return;
      case K::And:
        check_state_formula(f.lhs());
        check_state_formula(f.rhs());
        return;
      default:
        throw UnsupportedFormula("monitor supports only predicates and conjunctions under F, got '" + stl::to_string(f) +
                                 "'");
    }
  }

  int build(const stl::Formula& f) {
    using K = stl::Formula::Kind;
    switch (f.kind()) {
      case K::And: {
        const int l = build(f.lhs());
        const int r = build(f.rhs());
        tree_.push_back({-1, l, r});
        return static_cast<int>(tree_.size() - 1);
      }
      case K::Eventually:
      case K::EventuallyUnbounded: {
        check_state_formula(f.child());
        const bool bounded = f.kind() == K::Eventually && f.interval().bounded();
        if (!bounded && f.interval().lower() != 0.0)
          throw UnsupportedFormula("unbounded eventually must start at 0, got '" + stl::to_string(f) + "'");
        slots_.push_back({bounded, f.interval(), f.child()});
        tree_.push_back({static_cast<int>(slots_.size() - 1), -1, -1});
        return static_cast<int>(tree_.size() - 1);
      }
      default:
        throw UnsupportedFormula("monitor supports only conjunctions of eventually operators, got '" +
                                 stl::to_string(f) + "'");
    }
  }

  static double state_value(const stl::Formula& f, std::span<const double> state) {
    using K = stl::Formula::Kind;
    switch (f.kind()) {
      case K::True: return stl::kInfinity;
      case K::Pred: return f.predicate().robustness(state);
      case K::And: return std::min(state_value(f.lhs(), state), state_value(f.rhs(), state));
      default: return 0.0;  // rejected at construction
    }
  }

  SlotValue fold_node(int idx, const Annotation& ann) const {
    const TreeNode& n = tree_[static_cast<std::size_t>(idx)];
    if (n.slot >= 0) return ann.slots[static_cast<std::size_t>(n.slot)];
    const SlotValue l = fold_node(n.left, ann);
    const SlotValue r = fold_node(n.right, ann);
    if (!l) return r;
    if (!r) return l;
    return std::min(*l, *r);
  }

  std::vector<Slot> slots_;
  std::vector<TreeNode> tree_;
  int root_ = -1;
};

}  // namespace lgsst::monitor
