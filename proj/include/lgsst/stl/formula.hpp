#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lgsst/geometry.hpp"

namespace lgsst::stl {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Closed time window [lower, upper] in seconds. `upper` may be +inf.
class TimeInterval {
public:
  TimeInterval() = default;

  TimeInterval(double lower, double upper) : lower_(lower), upper_(upper) {
    if (!std::isfinite(lower) || lower < 0.0)
      throw std::invalid_argument("time interval lower bound must be finite and >= 0");
    if (std::isnan(upper) || upper < lower)
      throw std::invalid_argument("time interval bound violation: a > b");
  }

  static TimeInterval unbounded() { return TimeInterval(0.0, kInfinity); }

  double lower() const { return lower_; }
  double upper() const { return upper_; }
  bool bounded() const { return std::isfinite(upper_); }
  double width() const { return upper_ - lower_; }
  bool contains(double t) const { return lower_ <= t && t <= upper_; }

  friend bool operator==(const TimeInterval&, const TimeInterval&) = default;

private:
  double lower_ = 0.0;
  double upper_ = 0.0;
};

enum class Relation { GreaterEqual, Greater, LessEqual, Less };

/// pi(s) ~ mu with pi linear over the state vector (x, y, theta, ...).
struct LinearPredicate {
  std::vector<double> coefficients;
  double threshold = 0.0;
  Relation relation = Relation::GreaterEqual;

  friend bool operator==(const LinearPredicate&, const LinearPredicate&) = default;
};

/// Euclidean distance of the (x, y) projection to `center` is at most `radius`.
struct DiskPredicate {
  Vec2 center;
  double radius = 0.0;
  bool strict = false;

  friend bool operator==(const DiskPredicate&, const DiskPredicate&) = default;
};

class Predicate {
public:
  using Form = std::variant<LinearPredicate, DiskPredicate>;

  explicit Predicate(LinearPredicate p) : form_(std::move(p)) {
    const auto& lin = std::get<LinearPredicate>(form_);
    bool any = false;
    for (double c : lin.coefficients) any = any || c != 0.0;
    if (!any) throw std::invalid_argument("linear predicate needs a nonzero coefficient");
  }

  explicit Predicate(DiskPredicate d) : form_(d) {
    if (!(d.radius > 0.0)) throw std::invalid_argument("disk predicate radius must be positive");
  }

  static Predicate disk(Vec2 center, double radius) { return Predicate(DiskPredicate{center, radius, false}); }

  const Form& form() const { return form_; }
  bool is_disk() const { return std::holds_alternative<DiskPredicate>(form_); }
  const DiskPredicate& as_disk() const { return std::get<DiskPredicate>(form_); }

  /// Signed robustness of the predicate at a single state.
  double robustness(std::span<const double> state) const {
    if (const auto* d = std::get_if<DiskPredicate>(&form_)) {
      const double dist = std::hypot(state[0] - d->center.x, state[1] - d->center.y);
      return d->radius - dist;
    }
    const auto& lin = std::get<LinearPredicate>(form_);
    double value = 0.0;
    for (std::size_t i = 0; i < lin.coefficients.size(); ++i) {
      if (lin.coefficients[i] == 0.0) continue;
      if (i >= state.size()) throw std::out_of_range("predicate refers to a missing state dimension");
      value += lin.coefficients[i] * state[i];
    }
    switch (lin.relation) {
      case Relation::GreaterEqual:
      case Relation::Greater: return value - lin.threshold;
      case Relation::LessEqual:
      case Relation::Less: return lin.threshold - value;
    }
    return 0.0;
  }

  bool holds(std::span<const double> state) const {
    const double r = robustness(state);
    const bool strict = std::visit(
        [](const auto& p) {
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>, DiskPredicate>)
            return p.strict;
          else
            return p.relation == Relation::Greater || p.relation == Relation::Less;
        },
        form_);
    return strict ? r > 0.0 : r >= 0.0;
  }

  friend bool operator==(const Predicate&, const Predicate&) = default;

private:
  Form form_;
};

/// Immutable STL syntax tree. Copies share structure.
class Formula {
public:
  enum class Kind { True, Pred, Not, And, Or, Until, Eventually, EventuallyUnbounded, Globally };

  static Formula truth() { return Formula(std::make_shared<Node>(Kind::True)); }

  static Formula pred(Predicate p) {
    Node n(Kind::Pred);
    n.predicate = std::make_shared<const Predicate>(std::move(p));
    return Formula(std::make_shared<Node>(std::move(n)));
  }

  static Formula negate(Formula f) { return unary(Kind::Not, std::move(f), {}); }
  static Formula conj(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b), {}); }
  static Formula disj(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b), {}); }
  static Formula until(Formula a, TimeInterval i, Formula b) {
    return binary(Kind::Until, std::move(a), std::move(b), i);
  }
  static Formula eventually(TimeInterval i, Formula f) { return unary(Kind::Eventually, std::move(f), i); }
  static Formula eventually(Formula f) {
    return unary(Kind::EventuallyUnbounded, std::move(f), TimeInterval::unbounded());
  }
  static Formula globally(TimeInterval i, Formula f) { return unary(Kind::Globally, std::move(f), i); }

  Kind kind() const { return node_->kind; }
  const Predicate& predicate() const { return *node_->predicate; }
  const TimeInterval& interval() const { return node_->interval; }

  /// Sole operand of unary nodes, left operand of binary ones.
  const Formula& child() const { return node_->children.at(0); }
  const Formula& lhs() const { return node_->children.at(0); }
  const Formula& rhs() const { return node_->children.at(1); }
  const std::vector<Formula>& children() const { return node_->children; }

  bool is_temporal() const {
    switch (kind()) {
      case Kind::Until:
      case Kind::Eventually:
      case Kind::EventuallyUnbounded:
      case Kind::Globally: return true;
      default: return false;
    }
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (x.kind != y.kind) return false;
    if (x.kind == Kind::Pred) return *x.predicate == *y.predicate;
    if (x.interval != y.interval) return false;
    return x.children == y.children;
  }

private:
  struct Node {
    explicit Node(Kind k) : kind(k) {}
    Kind kind;
    std::shared_ptr<const Predicate> predicate;
    TimeInterval interval;
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Formula unary(Kind k, Formula f, TimeInterval i) {
    Node n(k);
    n.interval = i;
    n.children.push_back(std::move(f));
    return Formula(std::make_shared<Node>(std::move(n)));
  }

  static Formula binary(Kind k, Formula a, Formula b, TimeInterval i) {
    Node n(k);
    n.interval = i;
    n.children.push_back(std::move(a));
    n.children.push_back(std::move(b));
    return Formula(std::make_shared<Node>(std::move(n)));
  }

  std::shared_ptr<const Node> node_;
};

}  // namespace lgsst::stl
