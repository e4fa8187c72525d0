#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "pbl/errors.hpp"

namespace pbl {

/**
 * Exact rational number, always stored normalized (gcd(num, den) = 1, den > 0).
 *
 * Truth values in this library are quotients of small integers: grid points
 * k/D, their complements, sums and differences thereof. Denominators never
 * leave the low hundreds, so int64 components with __int128 cross products
 * are exact with an enormous margin.
 */
class Rational {
 public:
  constexpr Rational() = default;

  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw Error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static Rational from_int(std::int64_t n) { return Rational(n, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend bool operator==(const Rational& a, const Rational& b) = default;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /**
   * Accepts "3", "0.35", ".5", or "7/20". Decimal forms convert exactly.
   * Throws ParseError on anything else.
   */
  static Rational parse(std::string_view text);

  /**
   * Decimal rendering, exact whenever the denominator divides a power of ten
   * (always true for grid values with denominator 2^a * 5^b, e.g. D = 20).
   * Integers render without a point ("0", "1"); other terminating values with
   * the shortest digit string ("0.3", "0.05"). Non-terminating values fall
   * back to "num/den".
   */
  std::string to_decimal() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  const auto bad = [&] { return ParseError("bad rational literal: '" + std::string(text) + "'"); };

  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view ns = text.substr(0, slash), ds = text.substr(slash + 1);
    if (ns.empty() || ds.empty()) throw bad();
    std::int64_t n = 0, d = 0;
    for (char c : ns) {
      if (c < '0' || c > '9') throw bad();
      n = n * 10 + (c - '0');
    }
    for (char c : ds) {
      if (c < '0' || c > '9') throw bad();
      d = d * 10 + (c - '0');
    }
    if (d == 0) throw bad();
    return Rational(n, d);
  }

  const auto dot = text.find('.');
  std::string_view whole = dot == std::string_view::npos ? text : text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw bad();
  std::int64_t n = 0, d = 1;
  for (char c : whole) {
    if (c < '0' || c > '9') throw bad();
    n = n * 10 + (c - '0');
  }
  for (char c : frac) {
    if (c < '0' || c > '9') throw bad();
    if (d > 1'000'000'000'000'000) throw bad();
    n = n * 10 + (c - '0');
    d *= 10;
  }
  return Rational(n, d);
}

inline std::string Rational::to_decimal() const {
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
  if (den_ == 1) return std::to_string(num_);

  const int k = twos > fives ? twos : fives;
  std::int64_t scale = 1;
  for (int i = 0; i < k; ++i) scale *= 10;
  const bool neg = num_ < 0;
  std::int64_t scaled = (neg ? -num_ : num_) * (scale / den_);
  std::string digits = std::to_string(scaled % scale);
  digits.insert(digits.begin(), static_cast<std::size_t>(k) - digits.size(), '0');
  while (!digits.empty() && digits.back() == '0') digits.pop_back();

  std::string out = neg ? "-" : "";
  out += std::to_string(scaled / scale);
  if (!digits.empty()) out += "." + digits;
  return out;
}

}  // namespace pbl
