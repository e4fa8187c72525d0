#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pbl/algebra.hpp"
#include "pbl/errors.hpp"
#include "pbl/fuzzy.hpp"
#include "pbl/interval.hpp"

namespace pbl {

/**
 * Outcome of a filter predicate. When the predicate fails, the verdict names
 * the first violated condition and carries the smallest witness: loops run in
 * lexicographic element order with thresholds innermost, so the reported
 * tuple is minimal under (elements, thresholds) ordering and two runs always
 * report the same one.
 */
struct FilterWitness {
  std::vector<Element> elements;
  std::vector<IntervalNumber> thresholds;
};

struct FilterVerdict {
  bool holds = true;
  std::optional<std::string> violated_condition;
  std::optional<FilterWitness> witness;

  static FilterVerdict pass() { return {}; }
  static FilterVerdict fail(std::string condition, FilterWitness w) {
    FilterVerdict v;
    v.holds = false;
    v.violated_condition = std::move(condition);
    v.witness = std::move(w);
    return v;
  }
  explicit operator bool() const { return holds; }
};

inline std::string describe(const FilterVerdict& v, const FinitePseudoBL& a) {
  if (v.holds) return "holds";
  std::string out = "fails " + *v.violated_condition;
  if (v.witness) {
    out += " at (";
    for (std::size_t i = 0; i < v.witness->elements.size(); ++i) {
      if (i) out += ",";
      out += a.name(v.witness->elements[i]);
    }
    out += ")";
    for (const auto& t : v.witness->thresholds) out += " " + to_string(t);
  }
  return out;
}

namespace detail {

inline const IntervalNumber& half() {
  static const IntervalNumber h = IntervalNumber::half();
  return h;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Scalar (degenerate-interval) notions. These are the classical [0,1]-valued
// definitions; sets must carry degenerate values only.
// ---------------------------------------------------------------------------

inline void require_scalar(const IVFuzzySet& f) {
  for (int x = 0; x < f.carrier_size(); ++x)
    if (!f(x).is_degenerate())
      throw NonScalarSetError("scalar predicate on a set with value " + to_string(f(x)));
}

/// mu(x.y) >= min(mu(x), mu(y)) and monotonicity.
inline FilterVerdict is_fuzzy_filter_scalar(const FinitePseudoBL& a, const IVFuzzySet& f) {
  require_scalar(f);
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (!leq(rmin(f(x), f(y)), f(a.prod(x, y))))
        return FilterVerdict::fail("scalar-filter(i)", {{x, y}, {}});
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && !leq(f(x), f(y)))
        return FilterVerdict::fail("scalar-filter(ii)", {{x, y}, {}});
  return FilterVerdict::pass();
}

/// Scalar filter with mu(x) >= max(mu((x->y)~>x), mu((x~>y)->x)).
inline FilterVerdict is_fuzzy_implicative_filter_scalar(const FinitePseudoBL& a,
                                                        const IVFuzzySet& f) {
  FilterVerdict base = is_fuzzy_filter_scalar(a, f);
  if (!base) return base;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      const IntervalNumber bound =
          rmax(f(a.sarrow(a.arrow(x, y), x)), f(a.arrow(a.sarrow(x, y), x)));
      if (!leq(bound, f(x))) return FilterVerdict::fail("scalar-implicative(iii)", {{x, y}, {}});
    }
  return FilterVerdict::pass();
}

// ---------------------------------------------------------------------------
// Interval-valued notions.
// ---------------------------------------------------------------------------

/// (F1) F(x.y) >= rmin(F(x), F(y)); (F2) x <= y implies F(x) <= F(y).
inline FilterVerdict is_iv_fuzzy_filter(const FinitePseudoBL& a, const IVFuzzySet& f) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (!leq(rmin(f(x), f(y)), f(a.prod(x, y))))
        return FilterVerdict::fail("F1", {{x, y}, {}});
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && !leq(f(x), f(y)))
        return FilterVerdict::fail("F2", {{x, y}, {}});
  return FilterVerdict::pass();
}

/**
 * The pointwise (in, in-or-q) definition, quantified over an explicit
 * threshold grid:
 *
 *   (F3) U(x;t) in F and U(y;s) in F imply U(x.y; rmin(t,s)) in-or-q F
 *   (F4) x <= y and U(x;t) in F imply U(y;t) in-or-q F
 *
 * For dichotomous F the meet-closed grid from pointwise_threshold_grid()
 * makes this decision exact (equivalent to quantifying over all thresholds).
 */
inline FilterVerdict is_iv_evq_fuzzy_filter_pointwise(const FinitePseudoBL& a, const IVFuzzySet& f,
                                                      std::span<const IntervalNumber> grid,
                                                      ExceedRule rule = ExceedRule::order_strict) {
  const IntervalNumber nil = IntervalNumber::zero();
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      for (const IntervalNumber& t : grid)
        for (const IntervalNumber& s : grid) {
          if (t == nil || s == nil) continue;
          if (!belongs(FuzzyPoint(x, t), f) || !belongs(FuzzyPoint(y, s), f)) continue;
          const IntervalNumber m = rmin(t, s);
          if (!in_or_q(FuzzyPoint(a.prod(x, y), m), f, rule))
            return FilterVerdict::fail("F3", {{x, y}, {t, s}});
        }
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (!a.leq(x, y)) continue;
      for (const IntervalNumber& t : grid) {
        if (t == nil) continue;
        if (!belongs(FuzzyPoint(x, t), f)) continue;
        if (!in_or_q(FuzzyPoint(y, t), f, rule))
          return FilterVerdict::fail("F4", {{x, y}, {t}});
      }
    }
  return FilterVerdict::pass();
}

/// Meet-closure of F's image together with [0.5, 0.5]: the grid over which
/// the pointwise definition is exact for dichotomous F.
inline std::vector<IntervalNumber> pointwise_threshold_grid(const IVFuzzySet& f) {
  std::vector<IntervalNumber> grid = critical_thresholds(f, full_window(), ThresholdMode::general);
  if (std::find(grid.begin(), grid.end(), detail::half()) == grid.end())
    grid.push_back(detail::half());
  std::sort(grid.begin(), grid.end(), [](const IntervalNumber& a, const IntervalNumber& b) {
    if (a.lo() != b.lo()) return a.lo() < b.lo();
    return a.hi() < b.hi();
  });
  return grid;
}

/// (F5) F(x.y) >= rmin(F(x), F(y), [0.5,0.5]);
/// (F6) x <= y implies F(y) >= rmin(F(x), [0.5,0.5]).
inline FilterVerdict is_iv_evq_fuzzy_filter(const FinitePseudoBL& a, const IVFuzzySet& f) {
  const IntervalNumber& h = detail::half();
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (!leq(rmin(rmin(f(x), f(y)), h), f(a.prod(x, y))))
        return FilterVerdict::fail("F5", {{x, y}, {}});
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && !leq(rmin(f(x), h), f(y)))
        return FilterVerdict::fail("F6", {{x, y}, {}});
  return FilterVerdict::pass();
}

/// (F7) F(1) >= rmin(F(x), [0.5,0.5]) together with one of
/// (F8)  F(y) >= rmin(F(x), F(x->y), [0.5,0.5])
/// (F8') F(y) >= rmin(F(x), F(x~>y), [0.5,0.5]).
/// The disjunction is global: one of the two must hold for all pairs.
inline FilterVerdict satisfies_prop_3_6(const FinitePseudoBL& a, const IVFuzzySet& f) {
  const IntervalNumber& h = detail::half();
  for (Element x = 0; x < a.size(); ++x)
    if (!leq(rmin(f(x), h), f(a.one()))) return FilterVerdict::fail("F7", {{x}, {}});

  std::optional<FilterWitness> first_f8;
  for (Element x = 0; x < a.size() && !first_f8; ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (!leq(rmin(rmin(f(x), f(a.arrow(x, y))), h), f(y))) {
        first_f8 = FilterWitness{{x, y}, {}};
        break;
      }
  if (!first_f8) return FilterVerdict::pass();

  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (!leq(rmin(rmin(f(x), f(a.sarrow(x, y))), h), f(y)))
        return FilterVerdict::fail("F8|F8'", *first_f8);
  return FilterVerdict::pass();
}

/// (F9) rmax(F(x.y), [0.5,0.5]) >= rmin(F(x), F(y));
/// (F10) x <= y implies rmax(F(y), [0.5,0.5]) >= F(x).
inline FilterVerdict satisfies_F9_F10(const FinitePseudoBL& a, const IVFuzzySet& f) {
  const IntervalNumber& h = detail::half();
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (!leq(rmin(f(x), f(y)), rmax(f(a.prod(x, y)), h)))
        return FilterVerdict::fail("F9", {{x, y}, {}});
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && !leq(f(x), rmax(f(y), h)))
        return FilterVerdict::fail("F10", {{x, y}, {}});
  return FilterVerdict::pass();
}

inline void require_threshold_pair(const IntervalNumber& alpha, const IntervalNumber& beta) {
  if (!lt(alpha, beta))
    throw BadThresholdsError("thresholds must satisfy alpha < beta, got alpha=" +
                             to_string(alpha) + " beta=" + to_string(beta));
}

/// (F11) rmax(F(x.y), alpha) >= rmin(F(x), F(y), beta);
/// (F12) x <= y implies rmax(F(y), alpha) >= rmin(F(x), beta).
inline FilterVerdict is_threshold_fuzzy_filter(const FinitePseudoBL& a, const IVFuzzySet& f,
                                               const IntervalNumber& alpha,
                                               const IntervalNumber& beta) {
  require_threshold_pair(alpha, beta);
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (!leq(rmin(rmin(f(x), f(y)), beta), rmax(f(a.prod(x, y)), alpha)))
        return FilterVerdict::fail("F11", {{x, y}, {}});
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && !leq(rmin(f(x), beta), rmax(f(y), alpha)))
        return FilterVerdict::fail("F12", {{x, y}, {}});
  return FilterVerdict::pass();
}

/// (F13) F(x) >= rmin(F((x->y)~>x), [0.5,0.5]) and the twin with (x~>y)->x.
/// Tags "F13a" (arrow first) and "F13b" (sarrow first). The implicative-filter
/// notion is an (in, in-or-q) filter satisfying both, so the (F5),(F6) check
/// runs first and its verdict passes through on failure.
inline FilterVerdict is_iv_evq_implicative_filter(const FinitePseudoBL& a, const IVFuzzySet& f) {
  FilterVerdict base = is_iv_evq_fuzzy_filter(a, f);
  if (!base) return base;
  const IntervalNumber& h = detail::half();
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (!leq(rmin(f(a.sarrow(a.arrow(x, y), x)), h), f(x)))
        return FilterVerdict::fail("F13a", {{x, y}, {}});
      if (!leq(rmin(f(a.arrow(a.sarrow(x, y), x)), h), f(x)))
        return FilterVerdict::fail("F13b", {{x, y}, {}});
    }
  return FilterVerdict::pass();
}

/// The eight inequalities every (in, in-or-q) implicative filter satisfies,
/// tags "P4.2(1a)" through "P4.2(4b)". Callers supply a set already known to
/// be an implicative filter; the function itself just evaluates.
inline FilterVerdict check_prop_4_2(const FinitePseudoBL& a, const IVFuzzySet& f) {
  const IntervalNumber& h = detail::half();
  const auto bound = [&](Element e) { return rmin(f(e), h); };
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      const Element xy_a = a.arrow(x, y), xy_s = a.sarrow(x, y);
      const Element yx_a = a.arrow(y, x), yx_s = a.sarrow(y, x);
      if (!leq(bound(a.arrow(xy_a, x)), f(x)))
        return FilterVerdict::fail("P4.2(1a)", {{x, y}, {}});
      if (!leq(bound(a.sarrow(xy_s, x)), f(x)))
        return FilterVerdict::fail("P4.2(1b)", {{x, y}, {}});
      if (!leq(bound(xy_a), f(a.arrow(a.sarrow(yx_a, x), y))))
        return FilterVerdict::fail("P4.2(2a)", {{x, y}, {}});
      if (!leq(bound(xy_s), f(a.sarrow(a.arrow(yx_s, x), y))))
        return FilterVerdict::fail("P4.2(2b)", {{x, y}, {}});
      if (!leq(bound(a.sarrow(xy_a, y)), f(a.arrow(yx_s, x))))
        return FilterVerdict::fail("P4.2(3a)", {{x, y}, {}});
      if (!leq(bound(a.arrow(xy_s, y)), f(a.sarrow(yx_a, x))))
        return FilterVerdict::fail("P4.2(3b)", {{x, y}, {}});
      if (!leq(bound(a.sarrow(xy_a, y)), f(a.sarrow(yx_a, x))))
        return FilterVerdict::fail("P4.2(4a)", {{x, y}, {}});
      if (!leq(bound(a.sarrow(xy_s, y)), f(a.arrow(yx_s, x))))
        return FilterVerdict::fail("P4.2(4b)", {{x, y}, {}});
    }
  return FilterVerdict::pass();
}

/// (F14) rmax(F(x), [0.5,0.5]) >= F((x->y)~>x) and the twin with (x~>y)->x.
inline FilterVerdict satisfies_F14(const FinitePseudoBL& a, const IVFuzzySet& f) {
  const IntervalNumber& h = detail::half();
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (!leq(f(a.sarrow(a.arrow(x, y), x)), rmax(f(x), h)))
        return FilterVerdict::fail("F14a", {{x, y}, {}});
      if (!leq(f(a.arrow(a.sarrow(x, y), x)), rmax(f(x), h)))
        return FilterVerdict::fail("F14b", {{x, y}, {}});
    }
  return FilterVerdict::pass();
}

/// (F15) rmax(F(x), alpha) >= rmin(F((x->y)~>x), beta) plus the twin, on top
/// of the threshold filter conditions (F11), (F12).
inline FilterVerdict is_threshold_implicative_filter(const FinitePseudoBL& a, const IVFuzzySet& f,
                                                     const IntervalNumber& alpha,
                                                     const IntervalNumber& beta) {
  FilterVerdict base = is_threshold_fuzzy_filter(a, f, alpha, beta);
  if (!base) return base;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (!leq(rmin(f(a.sarrow(a.arrow(x, y), x)), beta), rmax(f(x), alpha)))
        return FilterVerdict::fail("F15a", {{x, y}, {}});
      if (!leq(rmin(f(a.arrow(a.sarrow(x, y), x)), beta), rmax(f(x), alpha)))
        return FilterVerdict::fail("F15b", {{x, y}, {}});
    }
  return FilterVerdict::pass();
}

/// (F16) F(((y->x)~>x)->y) >= rmin(F(x->y), [0.5,0.5]) and the twin, on top
/// of the (in, in-or-q) filter conditions.
inline FilterVerdict is_iv_evq_mv_filter(const FinitePseudoBL& a, const IVFuzzySet& f) {
  FilterVerdict base = is_iv_evq_fuzzy_filter(a, f);
  if (!base) return base;
  const IntervalNumber& h = detail::half();
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (!leq(rmin(f(a.arrow(x, y)), h), f(a.arrow(a.sarrow(a.arrow(y, x), x), y))))
        return FilterVerdict::fail("F16a", {{x, y}, {}});
      if (!leq(rmin(f(a.sarrow(x, y)), h), f(a.sarrow(a.arrow(a.sarrow(y, x), x), y))))
        return FilterVerdict::fail("F16b", {{x, y}, {}});
    }
  return FilterVerdict::pass();
}

/// (F17) F(x->y) >= rmin(F(x->(x->y)), [0.5,0.5]) and the twin, on top of the
/// (in, in-or-q) filter conditions.
inline FilterVerdict is_iv_evq_g_filter(const FinitePseudoBL& a, const IVFuzzySet& f) {
  FilterVerdict base = is_iv_evq_fuzzy_filter(a, f);
  if (!base) return base;
  const IntervalNumber& h = detail::half();
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (!leq(rmin(f(a.arrow(x, a.arrow(x, y))), h), f(a.arrow(x, y))))
        return FilterVerdict::fail("F17a", {{x, y}, {}});
      if (!leq(rmin(f(a.sarrow(x, a.sarrow(x, y))), h), f(a.sarrow(x, y))))
        return FilterVerdict::fail("F17b", {{x, y}, {}});
    }
  return FilterVerdict::pass();
}

/// Whether F assigns equal values to x->y and x~>y for all pairs; the
/// hypothesis under which implicative = MV + G.
inline bool arrows_agree(const FinitePseudoBL& a, const IVFuzzySet& f) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (f(a.arrow(x, y)) != f(a.sarrow(x, y))) return false;
  return true;
}

}  // namespace pbl
