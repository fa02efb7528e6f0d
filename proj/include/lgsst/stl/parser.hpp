#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lgsst/stl/formula.hpp"

namespace lgsst::stl {

class ParseError : public std::runtime_error {
public:
  enum class Kind { Syntax, Interval, UnknownIdentifier };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : std::runtime_error(what + " at offset " + std::to_string(position)), kind_(kind), position_(position) {}

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

private:
  Kind kind_;
  std::size_t position_;
};

namespace detail {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_or();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

private:
  [[noreturn]] void fail(const std::string& what, ParseError::Kind kind = ParseError::Kind::Syntax) const {
    throw ParseError(kind, pos_, what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return text_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::string_view peek_word() {
    skip_ws();
    std::size_t end = pos_;
    while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
    if (end == pos_ || std::isdigit(static_cast<unsigned char>(text_[pos_]))) return {};
    return text_.substr(pos_, end - pos_);
  }

  bool accept_word(std::string_view w) {
    if (peek_word() != w) return false;
    pos_ += w.size();
    return true;
  }

  bool peek_number() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return true;
    if ((c == '-' || c == '+') && pos_ + 1 < text_.size()) {
      const char d = text_[pos_ + 1];
      return std::isdigit(static_cast<unsigned char>(d)) || d == '.';
    }
    return false;
  }

  double number() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '+') ++start;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == text_.data() + start) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  TimeInterval interval() {
    expect("[");
    const std::size_t at = pos_;
    const double a = number();
    expect(",");
    double b = 0.0;
    if (accept_word("inf"))
      b = kInfinity;
    else
      b = number();
    expect("]");
    if (a < 0.0) throw ParseError(ParseError::Kind::Interval, at, "interval lower bound is negative");
    if (a > b) throw ParseError(ParseError::Kind::Interval, at, "interval bound violation (a > b)");
    return TimeInterval(a, b);
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept("|")) f = Formula::disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_until();
    while (accept("&")) f = Formula::conj(f, parse_until());
    return f;
  }

  Formula parse_until() {
    Formula f = parse_unary();
    if (peek_word() == "U") {
      pos_ += 1;
      const TimeInterval iv = interval();
      f = Formula::until(f, iv, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    if (accept("!")) return Formula::negate(parse_unary());
    const std::string_view w = peek_word();
    if (w == "F") {
      pos_ += 1;
      if (peek("[")) {
        const TimeInterval iv = interval();
        return Formula::eventually(iv, parse_unary());
      }
      return Formula::eventually(parse_unary());
    }
    if (w == "G") {
      pos_ += 1;
      if (!peek("[")) fail("G requires a time interval");
      const TimeInterval iv = interval();
      return Formula::globally(iv, parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    if (accept("(")) {
      Formula f = parse_or();
      expect(")");
      return f;
    }
    if (accept_word("true")) return Formula::truth();
    if (accept_word("false")) return Formula::negate(Formula::truth());
    if (peek_word() == "dist") return disk_predicate();
    return linear_predicate();
  }

  void expect_word(std::string_view w) {
    const std::size_t at = pos_;
    const std::string_view got = peek_word();
    if (got.empty()) fail("expected '" + std::string(w) + "'");
    if (got != w) throw ParseError(ParseError::Kind::UnknownIdentifier, at, "unexpected identifier '" + std::string(got) + "'");
    pos_ += w.size();
  }

  Formula disk_predicate() {
    expect_word("dist");
    expect("(");
    expect_word("x");
    expect(",");
    expect_word("y");
    expect(";");
    const double cx = number();
    expect(",");
    const double cy = number();
    expect(")");
    bool strict = false;
    if (accept("<="))
      strict = false;
    else if (accept("<"))
      strict = true;
    else
      fail("distance predicates support only '<=' or '<'");
    const std::size_t at = pos_;
    const double r = number();
    if (!(r > 0.0)) throw ParseError(ParseError::Kind::Syntax, at, "distance threshold must be positive");
    return Formula::pred(Predicate(DiskPredicate{{cx, cy}, r, strict}));
  }

  int variable() {
    const std::size_t at = pos_;
    const std::string_view w = peek_word();
    if (w.empty()) fail("expected a state variable");
    int idx = -1;
    if (w == "x") idx = 0;
    else if (w == "y") idx = 1;
    else if (w == "theta") idx = 2;
    else throw ParseError(ParseError::Kind::UnknownIdentifier, at, "unknown identifier '" + std::string(w) + "'");
    pos_ += w.size();
    return idx;
  }

  Formula linear_predicate() {
    std::vector<double> coeffs(3, 0.0);
    double constant = 0.0;
    bool first = true;
    bool any_term = false;
    for (;;) {
      double sign = 1.0;
      if (!first) {
        if (accept("+"))
          sign = 1.0;
        else if (peek("-") && !peek("->"))
          sign = (++pos_, -1.0);
        else
          break;
      }
      first = false;
      if (peek_number()) {
        const double c = number();
        if (accept("*")) {
          coeffs[variable()] += sign * c;
        } else {
          constant += sign * c;
        }
      } else {
        coeffs[variable()] += sign;
      }
      any_term = true;
    }
    if (!any_term) fail("expected a predicate");
    Relation rel{};
    if (accept(">="))
      rel = Relation::GreaterEqual;
    else if (accept("<="))
      rel = Relation::LessEqual;
    else if (accept(">"))
      rel = Relation::Greater;
    else if (accept("<"))
      rel = Relation::Less;
    else
      fail("expected a comparison operator");
    const std::size_t at = pos_;
    const double mu = number() - constant;
    while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
    if (coeffs.empty()) throw ParseError(ParseError::Kind::Syntax, at, "predicate has no state variable");
    return Formula::pred(Predicate(LinearPredicate{coeffs, mu, rel}));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the concrete formula grammar (see docs/stl-grammar.md).
inline Formula parse_formula(std::string_view text) { return detail::Parser(text).parse(); }

}  // namespace lgsst::stl
