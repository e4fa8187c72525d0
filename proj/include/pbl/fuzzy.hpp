#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pbl/algebra.hpp"
#include "pbl/errors.hpp"
#include "pbl/interval.hpp"

namespace pbl {

/// A value is dichotomous when it is strictly below [0.5, 0.5] in the
/// componentwise order or at least [0.5, 0.5]. Values incomparable with the
/// midpoint (e.g. [0.3, 0.7]) are what every theorem here excludes.
inline bool is_dichotomous(const IntervalNumber& v) {
  const IntervalNumber h = IntervalNumber::half();
  return lt(v, h) || leq(h, v);
}

/**
 * Total map from a finite carrier {0, ..., n-1} to interval truth values.
 *
 * Dichotomy is enforced at construction by default; passing
 * `allow_nondichotomous` admits any values and records the breach in
 * dichotomous(), so exploratory sets stay representable without silently
 * entering theorem checks that assume the hypothesis.
 */
class IVFuzzySet {
 public:
  enum class Dichotomy { enforce, allow_nondichotomous };

  explicit IVFuzzySet(std::vector<IntervalNumber> values, Dichotomy mode = Dichotomy::enforce)
      : values_(std::move(values)) {
    if (values_.empty()) throw EmptyCollectionError("fuzzy set over an empty carrier");
    dichotomous_ = true;
    for (const auto& v : values_)
      if (!is_dichotomous(v)) {
        if (mode == Dichotomy::enforce)
          throw DichotomyError("membership value " + to_string(v) +
                               " is neither below [0.5,0.5] nor above it");
        dichotomous_ = false;
      }
  }

  /// Same value everywhere.
  static IVFuzzySet constant(int carrier, const IntervalNumber& v,
                             Dichotomy mode = Dichotomy::enforce) {
    return IVFuzzySet(std::vector<IntervalNumber>(static_cast<std::size_t>(carrier), v), mode);
  }

  int carrier_size() const { return static_cast<int>(values_.size()); }
  bool dichotomous() const { return dichotomous_; }

  const IntervalNumber& operator()(Element x) const {
    return values_[static_cast<std::size_t>(x)];
  }
  const std::vector<IntervalNumber>& values() const { return values_; }

  friend bool operator==(const IVFuzzySet& a, const IVFuzzySet& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<IntervalNumber> values_;
  bool dichotomous_;
};

/// `inside` on members of the subset, `outside` elsewhere.
inline IVFuzzySet indicator_set(int carrier, CrispSubset members, const IntervalNumber& inside,
                                const IntervalNumber& outside,
                                IVFuzzySet::Dichotomy mode = IVFuzzySet::Dichotomy::enforce) {
  std::vector<IntervalNumber> vals;
  vals.reserve(static_cast<std::size_t>(carrier));
  for (Element x = 0; x < carrier; ++x)
    vals.push_back(subset_contains(members, x) ? inside : outside);
  return IVFuzzySet(std::move(vals), mode);
}

/**
 * A fuzzy point U(x; t): the set mapping x to t and everything else to [0,0].
 * The value must be nonzero, otherwise the point is the empty set in disguise.
 */
struct FuzzyPoint {
  Element support;
  IntervalNumber value;

  FuzzyPoint(Element x, IntervalNumber t) : support(x), value(std::move(t)) {
    if (value == IntervalNumber::zero()) throw Error("fuzzy point with value [0,0]");
  }
};

/// U(x; t) in F: t <= F(x).
inline bool belongs(const FuzzyPoint& p, const IVFuzzySet& f) {
  return leq(p.value, f(p.support));
}

/// U(x; t) q F: F(x) + t > [1,1] under the chosen reading of ">".
inline bool quasi_coincident(const FuzzyPoint& p, const IVFuzzySet& f,
                             ExceedRule rule = ExceedRule::order_strict) {
  return exceeds_one(add(f(p.support), p.value), rule);
}

inline bool in_or_q(const FuzzyPoint& p, const IVFuzzySet& f,
                    ExceedRule rule = ExceedRule::order_strict) {
  return belongs(p, f) || quasi_coincident(p, f, rule);
}

inline bool in_and_q(const FuzzyPoint& p, const IVFuzzySet& f,
                     ExceedRule rule = ExceedRule::order_strict) {
  return belongs(p, f) && quasi_coincident(p, f, rule);
}

/// { x : t <= F(x) } as a bitmask. Meaningful for t != [0,0]; monotone
/// antitone in t (bigger thresholds cut smaller sets).
inline CrispSubset level_set(const IVFuzzySet& f, const IntervalNumber& t) {
  if (f.carrier_size() > 31) throw CarrierTooLargeError("level sets need carrier size <= 31");
  CrispSubset s = 0;
  for (Element x = 0; x < f.carrier_size(); ++x)
    if (leq(t, f(x))) s |= (1u << x);
  return s;
}

/// Half-open threshold window (low, high]: thresholds t with low < t <= high
/// in the componentwise order, "<" being its strict part.
struct ThresholdWindow {
  IntervalNumber low_exclusive;
  IntervalNumber high_inclusive;
};

inline bool window_contains(const ThresholdWindow& w, const IntervalNumber& t) {
  return lt(w.low_exclusive, t) && leq(t, w.high_inclusive);
}

/// Whether threshold quantifiers range over all intervals in a window or only
/// the degenerate ones [t, t].
enum class ThresholdMode { general, degenerate };

/**
 * A minimal set of thresholds realizing every level set that any threshold in
 * the window realizes: the meet-closure of F's image (level sets of
 * incomparable thresholds are intersections of image-level sets), each
 * clipped by rmin with the window top, plus the top itself, restricted to the
 * window and deduplicated one threshold per distinct level set. Sorted by
 * (lo, hi); each survivor is the lexicographically least threshold for its
 * level set.
 *
 * In degenerate mode the candidates are [l, l] for the lower endpoints of the
 * image (level sets of degenerate thresholds depend only on lower endpoints),
 * clipped against the largest degenerate threshold below the window top.
 */
inline std::vector<IntervalNumber> critical_thresholds(const IVFuzzySet& f,
                                                       const ThresholdWindow& window,
                                                       ThresholdMode mode = ThresholdMode::general) {
  std::vector<IntervalNumber> candidates;
  const auto push_unique = [](std::vector<IntervalNumber>& xs, const IntervalNumber& v) {
    if (std::find(xs.begin(), xs.end(), v) == xs.end()) xs.push_back(v);
  };

  if (mode == ThresholdMode::general) {
    std::vector<IntervalNumber> closure;
    for (const auto& v : f.values()) push_unique(closure, v);
    for (std::size_t i = 0; i < closure.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) push_unique(closure, rmin(closure[i], closure[j]));
    for (const auto& v : closure) push_unique(candidates, rmin(v, window.high_inclusive));
    push_unique(candidates, window.high_inclusive);
  } else {
    const Rational cap = window.high_inclusive.lo();
    for (const auto& v : f.values()) {
      const Rational l = v.lo() < cap ? v.lo() : cap;
      push_unique(candidates, IntervalNumber::degenerate(l));
    }
    push_unique(candidates, IntervalNumber::degenerate(cap));
  }

  std::vector<IntervalNumber> kept;
  for (const auto& c : candidates)
    if (window_contains(window, c)) kept.push_back(c);

  const auto lex_less = [](const IntervalNumber& a, const IntervalNumber& b) {
    if (a.lo() != b.lo()) return a.lo() < b.lo();
    return a.hi() < b.hi();
  };
  std::sort(kept.begin(), kept.end(), lex_less);

  std::vector<IntervalNumber> out;
  std::vector<CrispSubset> seen;
  for (const auto& c : kept) {
    const CrispSubset s = level_set(f, c);
    if (std::find(seen.begin(), seen.end(), s) == seen.end()) {
      seen.push_back(s);
      out.push_back(c);
    }
  }
  return out;
}

/// The whole threshold space (0,0] < t <= [1,1].
inline ThresholdWindow full_window() {
  return {IntervalNumber::zero(), IntervalNumber::one()};
}

/**
 * Lexicographic enumerator for interval-valued fuzzy sets whose endpoints lie
 * on a finite grid. Candidate index i decodes base-k with element 0 as the
 * most significant digit, so index order is lexicographic order on value
 * tuples. Intervals themselves are ordered by (lo, hi).
 */
class IVFuzzySetEnumerator {
 public:
  enum class Family { dichotomous, degenerate };

  IVFuzzySetEnumerator(int carrier, std::vector<Rational> endpoint_grid,
                       Family family = Family::dichotomous)
      : carrier_(carrier) {
    if (carrier_ < 1) throw EmptyCollectionError("enumeration over an empty carrier");
    std::sort(endpoint_grid.begin(), endpoint_grid.end());
    endpoint_grid.erase(std::unique(endpoint_grid.begin(), endpoint_grid.end()),
                        endpoint_grid.end());
    validate_grid(endpoint_grid);
    if (family == Family::dichotomous) {
      for (std::size_t i = 0; i < endpoint_grid.size(); ++i)
        for (std::size_t j = i; j < endpoint_grid.size(); ++j) {
          IntervalNumber v(endpoint_grid[i], endpoint_grid[j]);
          if (is_dichotomous(v)) intervals_.push_back(v);
        }
    } else {
      for (const auto& g : endpoint_grid) intervals_.push_back(IntervalNumber::degenerate(g));
    }
    std::uint64_t count = 1;
    for (int i = 0; i < carrier_; ++i) {
      if (count > UINT64_MAX / intervals_.size())
        throw CarrierTooLargeError("fuzzy-set enumeration would overflow");
      count *= intervals_.size();
    }
    count_ = count;
  }

  /// Grids must cover both window extremes and the midpoint every theorem
  /// pivots on.
  static void validate_grid(const std::vector<Rational>& grid) {
    const auto has = [&](const Rational& v) {
      return std::find(grid.begin(), grid.end(), v) != grid.end();
    };
    if (!has(Rational(1, 2)))
      throw GridMissingHalfError("endpoint grid must contain 0.5");
    if (!has(Rational(0, 1)) || !has(Rational(1, 1)))
      throw GridMissingHalfError("endpoint grid must contain 0 and 1");
    for (const auto& g : grid)
      if (g < Rational(0, 1) || g > Rational(1, 1))
        throw BadThresholdsError("grid value out of [0,1]: " + g.to_decimal());
  }

  std::uint64_t count() const { return count_; }
  int interval_count() const { return static_cast<int>(intervals_.size()); }
  const std::vector<IntervalNumber>& intervals() const { return intervals_; }

  IVFuzzySet at(std::uint64_t index) const {
    if (index >= count_) throw Error("enumeration index out of range");
    const std::uint64_t k = intervals_.size();
    std::vector<IntervalNumber> vals(static_cast<std::size_t>(carrier_), intervals_[0]);
    for (int pos = carrier_ - 1; pos >= 0; --pos) {
      vals[static_cast<std::size_t>(pos)] = intervals_[static_cast<std::size_t>(index % k)];
      index /= k;
    }
    return IVFuzzySet(std::move(vals), IVFuzzySet::Dichotomy::allow_nondichotomous);
  }

 private:
  int carrier_;
  std::vector<IntervalNumber> intervals_;
  std::uint64_t count_ = 0;
};

inline IVFuzzySet set_union(const IVFuzzySet& a, const IVFuzzySet& b) {
  if (a.carrier_size() != b.carrier_size())
    throw CarrierMismatchError("union of sets over different carriers");
  std::vector<IntervalNumber> vals;
  vals.reserve(a.values().size());
  for (int x = 0; x < a.carrier_size(); ++x) vals.push_back(rmax(a(x), b(x)));
  return IVFuzzySet(std::move(vals), IVFuzzySet::Dichotomy::allow_nondichotomous);
}

inline IVFuzzySet set_intersection(const IVFuzzySet& a, const IVFuzzySet& b) {
  if (a.carrier_size() != b.carrier_size())
    throw CarrierMismatchError("intersection of sets over different carriers");
  std::vector<IntervalNumber> vals;
  vals.reserve(a.values().size());
  for (int x = 0; x < a.carrier_size(); ++x) vals.push_back(rmin(a(x), b(x)));
  return IVFuzzySet(std::move(vals), IVFuzzySet::Dichotomy::allow_nondichotomous);
}

inline IVFuzzySet set_complement(const IVFuzzySet& a) {
  std::vector<IntervalNumber> vals;
  vals.reserve(a.values().size());
  for (int x = 0; x < a.carrier_size(); ++x) vals.push_back(complement(a(x)));
  return IVFuzzySet(std::move(vals), IVFuzzySet::Dichotomy::allow_nondichotomous);
}

// ---------------------------------------------------------------------------
// Text format: one "index lo hi" line per element, every element exactly once.
//
//   # membership values
//   0 0.3 0.4
//   1 0.3 0.4
//   2 0.7 0.8
// ---------------------------------------------------------------------------

inline IVFuzzySet parse_fuzzy_set(std::istream& in, int carrier,
                                  IVFuzzySet::Dichotomy mode =
                                      IVFuzzySet::Dichotomy::allow_nondichotomous) {
  std::vector<IntervalNumber> vals(static_cast<std::size_t>(carrier), IntervalNumber::zero());
  std::vector<bool> seen(static_cast<std::size_t>(carrier), false);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string idx_tok, lo_tok, hi_tok;
    if (!(ls >> idx_tok)) continue;
    if (!(ls >> lo_tok >> hi_tok)) throw ParseError("fuzzy-set line needs 'index lo hi'");
    std::string extra;
    if (ls >> extra) throw ParseError("trailing token on fuzzy-set line: '" + extra + "'");
    int idx = 0;
    for (char c : idx_tok) {
      if (c < '0' || c > '9') throw ParseError("bad element index '" + idx_tok + "'");
      idx = idx * 10 + (c - '0');
      if (idx > carrier) break;
    }
    if (idx >= carrier) throw ParseError("element index " + idx_tok + " out of range");
    if (seen[static_cast<std::size_t>(idx)])
      throw ParseError("duplicate value for element " + idx_tok);
    const Rational lo = Rational::parse(lo_tok);
    const Rational hi = Rational::parse(hi_tok);
    if (lo < Rational(0, 1) || lo > hi || hi > Rational(1, 1))
      throw ParseError("membership endpoints out of range on line: " + line);
    vals[static_cast<std::size_t>(idx)] = IntervalNumber(lo, hi);
    seen[static_cast<std::size_t>(idx)] = true;
  }
  for (int x = 0; x < carrier; ++x)
    if (!seen[static_cast<std::size_t>(x)])
      throw ParseError("missing membership value for element " + std::to_string(x));
  return IVFuzzySet(std::move(vals), mode);
}

inline std::string serialize_fuzzy_set(const IVFuzzySet& f) {
  std::string out;
  for (int x = 0; x < f.carrier_size(); ++x)
    out += std::to_string(x) + " " + f(x).lo().to_decimal() + " " + f(x).hi().to_decimal() + "\n";
  return out;
}

}  // namespace pbl
