#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbl/errors.hpp"
#include "pbl/rational.hpp"

namespace pbl {

/**
 * A closed subinterval [lo, hi] of the unit interval with exact rational
 * endpoints: the truth values of interval-valued fuzzy sets.
 *
 * The componentwise order `leq` is partial; `lt` is its strict part
 * (leq and not equal), which is how every strict threshold comparison in
 * this library reads "<".
 */
class IntervalNumber {
 public:
  /// [0, 0].
  IntervalNumber() = default;

  IntervalNumber(Rational lo, Rational hi) : lo_(lo), hi_(hi) {
    if (Rational(0, 1) > lo_ || lo_ > hi_ || hi_ > Rational(1, 1))
      throw Error("interval endpoints must satisfy 0 <= lo <= hi <= 1, got [" +
                  lo.to_decimal() + "," + hi.to_decimal() + "]");
  }

  /// [lo_num/den, hi_num/den]; convenience for grid-valued endpoints.
  static IntervalNumber from_grid(std::int64_t lo_num, std::int64_t hi_num, std::int64_t den) {
    return IntervalNumber(Rational(lo_num, den), Rational(hi_num, den));
  }

  static IntervalNumber degenerate(const Rational& v) { return IntervalNumber(v, v); }

  static IntervalNumber zero() { return IntervalNumber(); }
  static IntervalNumber half() { return from_grid(1, 1, 2); }
  static IntervalNumber one() { return from_grid(1, 1, 1); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_degenerate() const { return lo_ == hi_; }

  friend bool operator==(const IntervalNumber&, const IntervalNumber&) = default;

 private:
  Rational lo_{0, 1};
  Rational hi_{0, 1};
};

inline bool leq(const IntervalNumber& a, const IntervalNumber& b) {
  return a.lo() <= b.lo() && a.hi() <= b.hi();
}

/// Strict part of the componentwise order, not "both components strictly less".
inline bool lt(const IntervalNumber& a, const IntervalNumber& b) {
  return leq(a, b) && a != b;
}

inline IntervalNumber rmin(const IntervalNumber& a, const IntervalNumber& b) {
  return IntervalNumber(a.lo() < b.lo() ? a.lo() : b.lo(), a.hi() < b.hi() ? a.hi() : b.hi());
}

inline IntervalNumber rmax(const IntervalNumber& a, const IntervalNumber& b) {
  return IntervalNumber(a.lo() < b.lo() ? b.lo() : a.lo(), a.hi() < b.hi() ? b.hi() : a.hi());
}

inline IntervalNumber rinf(std::span<const IntervalNumber> xs) {
  if (xs.empty()) throw EmptyCollectionError("rinf of an empty collection");
  IntervalNumber acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) acc = rmin(acc, xs[i]);
  return acc;
}

inline IntervalNumber rsup(std::span<const IntervalNumber> xs) {
  if (xs.empty()) throw EmptyCollectionError("rsup of an empty collection");
  IntervalNumber acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) acc = rmax(acc, xs[i]);
  return acc;
}

/// k * [lo, hi] = [k*lo, k*hi] for a scalar k in [0, 1].
inline IntervalNumber scale(const Rational& k, const IntervalNumber& a) {
  if (k < Rational(0, 1) || k > Rational(1, 1)) throw Error("scale factor must lie in [0, 1]");
  return IntervalNumber(k * a.lo(), k * a.hi());
}

/// [1 - hi, 1 - lo].
inline IntervalNumber complement(const IntervalNumber& a) {
  const Rational one(1, 1);
  return IntervalNumber(one - a.hi(), one - a.lo());
}

/**
 * Componentwise sum of two unit intervals. Endpoints range over [0, 2]; the
 * sole consumer is the quasi-coincidence test, which asks whether the sum
 * exceeds [1, 1].
 */
class ExtendedInterval {
 public:
  ExtendedInterval(Rational lo, Rational hi) : lo_(lo), hi_(hi) {
    if (Rational(0, 1) > lo_ || lo_ > hi_ || hi_ > Rational(2, 1))
      throw Error("extended interval endpoints must satisfy 0 <= lo <= hi <= 2");
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  friend bool operator==(const ExtendedInterval&, const ExtendedInterval&) = default;

 private:
  Rational lo_, hi_;
};

inline ExtendedInterval add(const IntervalNumber& a, const IntervalNumber& b) {
  return ExtendedInterval(a.lo() + b.lo(), a.hi() + b.hi());
}

/**
 * Reading of the strict comparison "sum > [1, 1]".
 *
 * `order_strict` is the strict part of the componentwise order: both
 * endpoints >= 1 and at least one > 1. `both_strict` demands both endpoints
 * strictly above 1; it kills several theorems and exists for experiments.
 */
enum class ExceedRule { order_strict, both_strict };

inline bool exceeds_one(const ExtendedInterval& e, ExceedRule rule = ExceedRule::order_strict) {
  const Rational one(1, 1);
  if (rule == ExceedRule::both_strict) return e.lo() > one && e.hi() > one;
  return e.lo() >= one && e.hi() >= one && !(e.lo() == one && e.hi() == one);
}

inline std::string to_string(const IntervalNumber& a) {
  return "[" + a.lo().to_decimal() + "," + a.hi().to_decimal() + "]";
}

inline std::ostream& operator<<(std::ostream& os, const IntervalNumber& a) {
  return os << to_string(a);
}

/// Parses "[0.3,0.4]"; whitespace around endpoints is tolerated.
inline IntervalNumber parse_interval(std::string_view text) {
  const auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.size() < 5 || s.front() != '[' || s.back() != ']')
    throw ParseError("bad interval literal: '" + std::string(text) + "'");
  s = s.substr(1, s.size() - 2);
  const auto comma = s.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("bad interval literal: '" + std::string(text) + "'");
  const Rational lo = Rational::parse(trim(s.substr(0, comma)));
  const Rational hi = Rational::parse(trim(s.substr(comma + 1)));
  if (lo < Rational(0, 1) || lo > hi || hi > Rational(1, 1))
    throw ParseError("interval endpoints out of range: '" + std::string(text) + "'");
  return IntervalNumber(lo, hi);
}

/// All intervals with both endpoints on the grid {0, 1/den, ..., 1}, in
/// lexicographic (lo, hi) order. 231 intervals for den = 20.
inline std::vector<IntervalNumber> grid_intervals(std::int64_t den) {
  std::vector<IntervalNumber> out;
  for (std::int64_t i = 0; i <= den; ++i)
    for (std::int64_t j = i; j <= den; ++j) out.push_back(IntervalNumber::from_grid(i, j, den));
  return out;
}

}  // namespace pbl
