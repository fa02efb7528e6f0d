#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgsst/stl/formula.hpp"

namespace lgsst::stl {

/// Finite sampled signal. Times start at 0 and increase strictly; every
/// sample has the same dimension.
class Trace {
public:
  Trace(std::vector<double> times, std::vector<std::vector<double>> states)
      : times_(std::move(times)), states_(std::move(states)) {
    if (times_.empty()) throw std::invalid_argument("trace must be nonempty");
    if (times_.size() != states_.size()) throw std::invalid_argument("trace times/states size mismatch");
    if (times_.front() != 0.0) throw std::invalid_argument("trace must start at t = 0");
    for (std::size_t i = 1; i < times_.size(); ++i)
      if (!(times_[i] > times_[i - 1])) throw std::invalid_argument("trace times must be strictly increasing");
    for (const auto& s : states_)
      if (s.size() != states_.front().size()) throw std::invalid_argument("trace states differ in dimension");
  }

  std::size_t size() const { return times_.size(); }
  double time(std::size_t i) const { return times_[i]; }
  std::span<const double> state(std::size_t i) const { return states_[i]; }
  const std::vector<double>& times() const { return times_; }

  /// Index of the sample at exactly time t.
  std::size_t index_of(double t) const {
    auto it = std::lower_bound(times_.begin(), times_.end(), t);
    if (it == times_.end() || *it != t) throw std::invalid_argument("evaluation time is not a sample instant");
    return static_cast<std::size_t>(it - times_.begin());
  }

  /// Half-open index range of samples with time in [lo, hi].
  std::pair<std::size_t, std::size_t> window(double lo, double hi) const {
    auto first = std::lower_bound(times_.begin(), times_.end(), lo);
    auto last = std::upper_bound(first, times_.end(), hi);
    return {static_cast<std::size_t>(first - times_.begin()), static_cast<std::size_t>(last - times_.begin())};
  }

private:
  std::vector<double> times_;
  std::vector<std::vector<double>> states_;
};

class EmptyWindowError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> temporal_window(const Trace& trace, std::size_t at, const TimeInterval& iv) {
  const double t = trace.time(at);
  return trace.window(t + iv.lower(), t + iv.upper());
}

inline bool sat_at(const Trace& trace, const Formula& phi, std::size_t at) {
  using K = Formula::Kind;
  switch (phi.kind()) {
    case K::True: return true;
    case K::Pred: return phi.predicate().holds(trace.state(at));
    case K::Not: return !sat_at(trace, phi.child(), at);
    case K::And: return sat_at(trace, phi.lhs(), at) && sat_at(trace, phi.rhs(), at);
    case K::Or: return sat_at(trace, phi.lhs(), at) || sat_at(trace, phi.rhs(), at);
    case K::Eventually:
    case K::EventuallyUnbounded: {
      const auto [lo, hi] = temporal_window(trace, at, phi.interval());
      for (std::size_t k = lo; k < hi; ++k)
        if (sat_at(trace, phi.child(), k)) return true;
      return false;
    }
    case K::Globally: {
      const auto [lo, hi] = temporal_window(trace, at, phi.interval());
      for (std::size_t k = lo; k < hi; ++k)
        if (!sat_at(trace, phi.child(), k)) return false;
      return true;
    }
    case K::Until: {
      const auto [lo, hi] = temporal_window(trace, at, phi.interval());
      for (std::size_t k = lo; k < hi; ++k) {
        if (!sat_at(trace, phi.rhs(), k)) continue;
        bool held = true;
        for (std::size_t j = at; j < k && held; ++j) held = sat_at(trace, phi.lhs(), j);
        if (held) return true;
      }
      return false;
    }
  }
  return false;
}

inline double rob_at(const Trace& trace, const Formula& phi, std::size_t at) {
  using K = Formula::Kind;
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (phi.kind()) {
    case K::True: return inf;
    case K::Pred: return phi.predicate().robustness(trace.state(at));
    case K::Not: return -rob_at(trace, phi.child(), at);
    case K::And: return std::min(rob_at(trace, phi.lhs(), at), rob_at(trace, phi.rhs(), at));
    case K::Or: return std::max(rob_at(trace, phi.lhs(), at), rob_at(trace, phi.rhs(), at));
    case K::Eventually:
    case K::EventuallyUnbounded:
    case K::Globally:
    case K::Until: break;
  }

  const auto [lo, hi] = temporal_window(trace, at, phi.interval());
  if (lo == hi) {
    if (phi.kind() == K::EventuallyUnbounded || !phi.interval().bounded()) return -inf;
    throw EmptyWindowError("no sample instant inside [" + std::to_string(trace.time(at) + phi.interval().lower()) +
                           ", " + std::to_string(trace.time(at) + phi.interval().upper()) + "]");
  }

  if (phi.kind() == K::Globally) {
    double r = inf;
    for (std::size_t k = lo; k < hi; ++k) r = std::min(r, rob_at(trace, phi.child(), k));
    return r;
  }
  if (phi.kind() != K::Until) {
    double r = -inf;
    for (std::size_t k = lo; k < hi; ++k) r = std::max(r, rob_at(trace, phi.child(), k));
    return r;
  }

  // Prefix minimum of the left operand over [at, k) is maintained while scanning.
  double prefix = inf;
  std::size_t next = at;
  double r = -inf;
  for (std::size_t k = lo; k < hi; ++k) {
    for (; next < k; ++next) prefix = std::min(prefix, rob_at(trace, phi.lhs(), next));
    r = std::max(r, std::min(rob_at(trace, phi.rhs(), k), prefix));
  }
  return r;
}

}  // namespace detail

/// Boolean satisfaction at sample time t (pointwise semantics).
inline bool boolean_sat(const Trace& trace, const Formula& phi, double t = 0.0) {
  return detail::sat_at(trace, phi, trace.index_of(t));
}

/// Quantitative robustness at sample time t. Throws EmptyWindowError if a
/// bounded window holds no sample.
inline double robustness(const Trace& trace, const Formula& phi, double t = 0.0) {
  return detail::rob_at(trace, phi, trace.index_of(t));
}

}  // namespace lgsst::stl
