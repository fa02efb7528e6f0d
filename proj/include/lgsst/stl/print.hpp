#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "lgsst/stl/formula.hpp"

namespace lgsst::stl {

/// Shortest decimal text that reads back to the same double.
inline std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return std::to_string(v);
  return std::string(buf, end);
}

namespace detail {

inline const char* relation_text(Relation r) {
  switch (r) {
    case Relation::GreaterEqual: return ">=";
    case Relation::Greater: return ">";
    case Relation::LessEqual: return "<=";
    case Relation::Less: return "<";
  }
  return "?";
}

inline std::string predicate_text(const Predicate& p) {
  if (p.is_disk()) {
    const auto& d = p.as_disk();
    return "dist(x,y; " + format_number(d.center.x) + "," + format_number(d.center.y) + ") " +
           (d.strict ? "< " : "<= ") + format_number(d.radius);
  }
  static const char* names[] = {"x", "y", "theta"};
  const auto& lin = std::get<LinearPredicate>(p.form());
  std::string out;
  for (std::size_t i = 0; i < lin.coefficients.size(); ++i) {
    const double c = lin.coefficients[i];
    if (c == 0.0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1.0) out += format_number(c) + "*";
    out += names[i];
  }
  return out + " " + relation_text(lin.relation) + " " + format_number(lin.threshold);
}

inline std::string interval_text(const TimeInterval& i) {
  return "[" + format_number(i.lower()) + "," + format_number(i.upper()) + "]";
}

// Every operand is printed as an atom so re-parsing never depends on precedence.
inline std::string atom(const Formula& f);

inline std::string print(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return "true";
    case K::Pred: return predicate_text(f.predicate());
    case K::Not: return "!" + atom(f.child());
    case K::And: return atom(f.lhs()) + " & " + atom(f.rhs());
    case K::Or: return atom(f.lhs()) + " | " + atom(f.rhs());
    case K::Until: return atom(f.lhs()) + " U" + interval_text(f.interval()) + " " + atom(f.rhs());
    case K::Eventually: return "F" + interval_text(f.interval()) + " " + atom(f.child());
    case K::EventuallyUnbounded: return "F " + atom(f.child());
    case K::Globally: return "G" + interval_text(f.interval()) + " " + atom(f.child());
  }
  return {};
}

inline std::string atom(const Formula& f) {
  if (f.kind() == Formula::Kind::True) return "true";
  return "(" + print(f) + ")";
}

}  // namespace detail

inline std::string to_string(const Formula& f) { return detail::print(f); }

}  // namespace lgsst::stl
