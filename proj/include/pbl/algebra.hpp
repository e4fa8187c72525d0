#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pbl/errors.hpp"

namespace pbl {

/// Index into an algebra's carrier.
using Element = int;

/// Subset of a carrier with at most 31 elements, bit i = element i.
using CrispSubset = std::uint32_t;

/**
 * A finite pseudo BL-algebra candidate: a carrier {0, ..., n-1} with five
 * operation tables and two designated constants. Construction checks only
 * shape (square tables, in-range entries, n >= 2); whether the tables satisfy
 * the axioms is the job of validate().
 *
 * Tables are row-major: table[x*n + y] is the result of x op y.
 */
class FinitePseudoBL {
 public:
  using Table = std::vector<Element>;

  FinitePseudoBL(int n, Table meet, Table join, Table prod, Table arrow, Table sarrow,
                 Element zero, Element one, std::vector<std::string> names = {})
      : n_(n),
        meet_(std::move(meet)),
        join_(std::move(join)),
        prod_(std::move(prod)),
        arrow_(std::move(arrow)),
        sarrow_(std::move(sarrow)),
        zero_(zero),
        one_(one),
        names_(std::move(names)) {
    if (n_ < 2) throw SizeTooSmallError("carrier must have at least two elements");
    const auto check = [&](const Table& t, const char* what) {
      if (t.size() != static_cast<std::size_t>(n_) * n_)
        throw MalformedTablesError(std::string(what) + " table is not n x n");
      for (Element e : t)
        if (e < 0 || e >= n_)
          throw MalformedTablesError(std::string(what) + " table entry out of range");
    };
    check(meet_, "meet");
    check(join_, "join");
    check(prod_, "prod");
    check(arrow_, "arrow");
    check(sarrow_, "sarrow");
    if (zero_ < 0 || zero_ >= n_ || one_ < 0 || one_ >= n_)
      throw MalformedTablesError("designated constant out of range");
    if (names_.empty()) {
      names_.reserve(n_);
      for (int i = 0; i < n_; ++i) names_.push_back(default_name(i, n_));
    } else if (names_.size() != static_cast<std::size_t>(n_)) {
      throw MalformedTablesError("element name list does not match carrier size");
    }
  }

  int size() const { return n_; }
  Element zero() const { return zero_; }
  Element one() const { return one_; }

  Element meet(Element x, Element y) const { return meet_[idx(x, y)]; }
  Element join(Element x, Element y) const { return join_[idx(x, y)]; }
  Element prod(Element x, Element y) const { return prod_[idx(x, y)]; }
  Element arrow(Element x, Element y) const { return arrow_[idx(x, y)]; }
  Element sarrow(Element x, Element y) const { return sarrow_[idx(x, y)]; }

  /// Lattice order induced by meet.
  bool leq(Element x, Element y) const { return meet(x, y) == x; }

  const std::string& name(Element x) const { return names_[static_cast<std::size_t>(x)]; }

  const Table& meet_table() const { return meet_; }
  const Table& join_table() const { return join_; }
  const Table& prod_table() const { return prod_; }
  const Table& arrow_table() const { return arrow_; }
  const Table& sarrow_table() const { return sarrow_; }

  /// Replaces one entry of one table; the result may well fail validation.
  enum class TableId { meet, join, prod, arrow, sarrow };
  FinitePseudoBL with_entry(TableId t, Element x, Element y, Element value) const {
    FinitePseudoBL copy = *this;
    Table* target = nullptr;
    switch (t) {
      case TableId::meet: target = &copy.meet_; break;
      case TableId::join: target = &copy.join_; break;
      case TableId::prod: target = &copy.prod_; break;
      case TableId::arrow: target = &copy.arrow_; break;
      case TableId::sarrow: target = &copy.sarrow_; break;
    }
    if (value < 0 || value >= n_) throw MalformedTablesError("replacement entry out of range");
    (*target)[idx(x, y)] = value;
    return copy;
  }

  friend bool operator==(const FinitePseudoBL& a, const FinitePseudoBL& b) {
    return a.n_ == b.n_ && a.zero_ == b.zero_ && a.one_ == b.one_ && a.meet_ == b.meet_ &&
           a.join_ == b.join_ && a.prod_ == b.prod_ && a.arrow_ == b.arrow_ &&
           a.sarrow_ == b.sarrow_;
  }

  static std::string default_name(int i, int n) {
    if (i == 0) return "0";
    if (i == n - 1) return "1";
    if (i <= 26) return std::string(1, static_cast<char>('a' + i - 1));
    return "e" + std::to_string(i);
  }

 private:
  std::size_t idx(Element x, Element y) const {
    return static_cast<std::size_t>(x) * n_ + y;
  }

  int n_;
  Table meet_, join_, prod_, arrow_, sarrow_;
  Element zero_, one_;
  std::vector<std::string> names_;
};

/**
 * Which divisibility identity validate() checks.
 *
 * `literature` is x AND y = (x->y) . x = x . (x~>y), the standard pseudo
 * BL-algebra axiom. `arrow_variant` replaces the first product with an
 * arrow, x AND y = (x->y) -> x; that identity is unsatisfiable on any
 * carrier with two or more elements (take x = 1, y = 0 and apply y <= x->y),
 * so it exists only to demonstrate that unsatisfiability on demand.
 */
enum class DivisibilityForm { literature, arrow_variant };

struct ValidationOptions {
  DivisibilityForm divisibility = DivisibilityForm::literature;
};

struct ValidationFailure {
  std::string law;                 // stable identifier, e.g. "a1", "meet.comm"
  std::vector<Element> witness;    // elements at which the law first fails
};

struct ValidationReport {
  bool passed = true;
  std::vector<ValidationFailure> failures;  // one entry per failing law, smallest witness each
};

namespace detail {

template <typename Fn>
void scan_unary(const FinitePseudoBL& a, ValidationReport& rep, const char* law, Fn ok) {
  for (Element x = 0; x < a.size(); ++x)
    if (!ok(x)) {
      rep.passed = false;
      rep.failures.push_back({law, {x}});
      return;
    }
}

template <typename Fn>
void scan_pairs(const FinitePseudoBL& a, ValidationReport& rep, const char* law, Fn ok) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (!ok(x, y)) {
        rep.passed = false;
        rep.failures.push_back({law, {x, y}});
        return;
      }
}

template <typename Fn>
void scan_triples(const FinitePseudoBL& a, ValidationReport& rep, const char* law, Fn ok) {
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      for (Element z = 0; z < a.size(); ++z)
        if (!ok(x, y, z)) {
          rep.passed = false;
          rep.failures.push_back({law, {x, y, z}});
          return;
        }
}

}  // namespace detail

/**
 * Checks every axiom and reports each failing law with its lexicographically
 * smallest witness. Laws are scanned in a fixed order (lattice, bounds,
 * constants, monoid, residuation, divisibility, prelinearity), so reports are
 * deterministic.
 */
inline ValidationReport validate(const FinitePseudoBL& a, ValidationOptions opts = {}) {
  ValidationReport rep;
  using detail::scan_pairs;
  using detail::scan_triples;
  using detail::scan_unary;

  scan_pairs(a, rep, "meet.comm", [&](Element x, Element y) { return a.meet(x, y) == a.meet(y, x); });
  scan_triples(a, rep, "meet.assoc", [&](Element x, Element y, Element z) {
    return a.meet(a.meet(x, y), z) == a.meet(x, a.meet(y, z));
  });
  scan_unary(a, rep, "meet.idem", [&](Element x) { return a.meet(x, x) == x; });
  scan_pairs(a, rep, "join.comm", [&](Element x, Element y) { return a.join(x, y) == a.join(y, x); });
  scan_triples(a, rep, "join.assoc", [&](Element x, Element y, Element z) {
    return a.join(a.join(x, y), z) == a.join(x, a.join(y, z));
  });
  scan_unary(a, rep, "join.idem", [&](Element x) { return a.join(x, x) == x; });
  scan_pairs(a, rep, "absorption.meet", [&](Element x, Element y) {
    return a.meet(x, a.join(x, y)) == x;
  });
  scan_pairs(a, rep, "absorption.join", [&](Element x, Element y) {
    return a.join(x, a.meet(x, y)) == x;
  });

  scan_unary(a, rep, "bounds.zero", [&](Element x) { return a.meet(x, a.zero()) == a.zero(); });
  scan_unary(a, rep, "bounds.one", [&](Element x) { return a.join(x, a.one()) == a.one(); });
  if (a.zero() == a.one()) {
    rep.passed = false;
    rep.failures.push_back({"constants.distinct", {a.zero(), a.one()}});
  }

  scan_triples(a, rep, "monoid.assoc", [&](Element x, Element y, Element z) {
    return a.prod(a.prod(x, y), z) == a.prod(x, a.prod(y, z));
  });
  scan_unary(a, rep, "monoid.unit.left", [&](Element x) { return a.prod(a.one(), x) == x; });
  scan_unary(a, rep, "monoid.unit.right", [&](Element x) { return a.prod(x, a.one()) == x; });

  // (a1)  x.y <= z  iff  x <= y->z  iff  y <= x~>z
  scan_triples(a, rep, "a1", [&](Element x, Element y, Element z) {
    const bool lhs = a.leq(a.prod(x, y), z);
    return lhs == a.leq(x, a.arrow(y, z)) && lhs == a.leq(y, a.sarrow(x, z));
  });

  // (a2)  x AND y = (x->y).x = x.(x~>y)   (first product becomes an arrow in
  // the arrow_variant form)
  scan_pairs(a, rep, "a2", [&](Element x, Element y) {
    const Element m = a.meet(x, y);
    const Element first = opts.divisibility == DivisibilityForm::literature
                              ? a.prod(a.arrow(x, y), x)
                              : a.arrow(a.arrow(x, y), x);
    return m == first && m == a.prod(x, a.sarrow(x, y));
  });

  // (a3)  (x->y) v (y->x) = 1 = (x~>y) v (y~>x)
  scan_pairs(a, rep, "a3", [&](Element x, Element y) {
    return a.join(a.arrow(x, y), a.arrow(y, x)) == a.one() &&
           a.join(a.sarrow(x, y), a.sarrow(y, x)) == a.one();
  });

  return rep;
}

/**
 * Checks the ten standard consequences of the axioms on an already valid
 * algebra (law ids "p1" through "p10"). Throws InvalidAlgebraError if
 * validate() fails first; the report itself should come back clean on any
 * validated algebra, which is exactly what the test suite pins down.
 */
inline ValidationReport check_derived_properties(const FinitePseudoBL& a,
                                                 ValidationOptions opts = {}) {
  const ValidationReport base = validate(a, opts);
  if (!base.passed)
    throw InvalidAlgebraError("derived-property check requires a valid algebra (first failing law: " +
                              base.failures.front().law + ")");

  ValidationReport rep;
  using detail::scan_pairs;
  using detail::scan_triples;
  using detail::scan_unary;

  // (1)  (x.y)->z = x->(y->z)
  scan_triples(a, rep, "p1", [&](Element x, Element y, Element z) {
    return a.arrow(a.prod(x, y), z) == a.arrow(x, a.arrow(y, z));
  });
  // (2)  (y.x)~>z = x~>(y~>z)
  scan_triples(a, rep, "p2", [&](Element x, Element y, Element z) {
    return a.sarrow(a.prod(y, x), z) == a.sarrow(x, a.sarrow(y, z));
  });
  // (3)  x <= y  iff  x->y = 1  iff  x~>y = 1
  scan_pairs(a, rep, "p3", [&](Element x, Element y) {
    const bool le = a.leq(x, y);
    return le == (a.arrow(x, y) == a.one()) && le == (a.sarrow(x, y) == a.one());
  });
  // (4)  (x~>y)~>x <= (x~>y)->((x~>y)~>y)
  scan_pairs(a, rep, "p4", [&](Element x, Element y) {
    const Element s = a.sarrow(x, y);
    return a.leq(a.sarrow(s, x), a.arrow(s, a.sarrow(s, y)));
  });
  // (5)(6)  products are monotone in each argument
  scan_triples(a, rep, "p5", [&](Element x, Element y, Element z) {
    return !a.leq(x, y) || a.leq(a.prod(x, z), a.prod(y, z));
  });
  scan_triples(a, rep, "p6", [&](Element x, Element y, Element z) {
    return !a.leq(x, y) || a.leq(a.prod(z, x), a.prod(z, y));
  });
  // (7)  x.y <= x and x.y <= y
  scan_pairs(a, rep, "p7", [&](Element x, Element y) {
    return a.leq(a.prod(x, y), x) && a.leq(a.prod(x, y), y);
  });
  // (8)  x.0 = 0.x = 0
  scan_unary(a, rep, "p8", [&](Element x) {
    return a.prod(x, a.zero()) == a.zero() && a.prod(a.zero(), x) == a.zero();
  });
  // (9)  1->x = 1~>x = x
  scan_unary(a, rep, "p9", [&](Element x) {
    return a.arrow(a.one(), x) == x && a.sarrow(a.one(), x) == x;
  });
  // (10)  y <= x->y
  scan_pairs(a, rep, "p10", [&](Element x, Element y) { return a.leq(y, a.arrow(x, y)); });

  return rep;
}

inline bool leq_elem(const FinitePseudoBL& a, Element x, Element y) { return a.leq(x, y); }

/// Chain 0 < a < b < ... < 1 with idempotent product (min) and residuum
/// x->y = 1 if x <= y else y. Both arrows coincide.
inline FinitePseudoBL godel_chain(int n) {
  if (n < 2) throw SizeTooSmallError("chains need at least two elements");
  FinitePseudoBL::Table meet(static_cast<std::size_t>(n) * n), join = meet, prod = meet,
                        arrow = meet, sarrow = meet;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const std::size_t k = static_cast<std::size_t>(x) * n + y;
      meet[k] = x < y ? x : y;
      join[k] = x < y ? y : x;
      prod[k] = x < y ? x : y;
      arrow[k] = x <= y ? n - 1 : y;
      sarrow[k] = arrow[k];
    }
  return FinitePseudoBL(n, meet, join, prod, arrow, sarrow, 0, n - 1);
}

/// Chain with carrier {0, 1/(n-1), ..., 1}, product max(0, x+y-1) and
/// residuum min(1, 1-x+y), both scaled to indices. Both arrows coincide.
inline FinitePseudoBL lukasiewicz_chain(int n) {
  if (n < 2) throw SizeTooSmallError("chains need at least two elements");
  FinitePseudoBL::Table meet(static_cast<std::size_t>(n) * n), join = meet, prod = meet,
                        arrow = meet, sarrow = meet;
  const int top = n - 1;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const std::size_t k = static_cast<std::size_t>(x) * n + y;
      meet[k] = x < y ? x : y;
      join[k] = x < y ? y : x;
      prod[k] = x + y - top > 0 ? x + y - top : 0;
      arrow[k] = top - x + y < top ? top - x + y : top;
      sarrow[k] = arrow[k];
    }
  return FinitePseudoBL(n, meet, join, prod, arrow, sarrow, 0, top);
}

/// Componentwise product algebra; element (i, j) has index i*size(b) + j.
inline FinitePseudoBL direct_product(const FinitePseudoBL& a, const FinitePseudoBL& b) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  const auto id = [&](Element i, Element j) { return i * nb + j; };
  FinitePseudoBL::Table meet(static_cast<std::size_t>(n) * n), join = meet, prod = meet,
                        arrow = meet, sarrow = meet;
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (Element i = 0; i < na; ++i)
    for (Element j = 0; j < nb; ++j) names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xi = x / nb, xj = x % nb, yi = y / nb, yj = y % nb;
      const std::size_t k = static_cast<std::size_t>(x) * n + y;
      meet[k] = id(a.meet(xi, yi), b.meet(xj, yj));
      join[k] = id(a.join(xi, yi), b.join(xj, yj));
      prod[k] = id(a.prod(xi, yi), b.prod(xj, yj));
      arrow[k] = id(a.arrow(xi, yi), b.arrow(xj, yj));
      sarrow[k] = id(a.sarrow(xi, yi), b.sarrow(xj, yj));
    }
  return FinitePseudoBL(n, meet, join, prod, arrow, sarrow, id(a.zero(), b.zero()),
                        id(a.one(), b.one()), std::move(names));
}

inline bool subset_contains(CrispSubset s, Element x) { return (s >> x) & 1u; }

/// Nonempty, closed under the product, and upward closed.
inline bool is_filter(const FinitePseudoBL& a, CrispSubset s) {
  if (s == 0) return false;
  const int n = a.size();
  for (Element x = 0; x < n; ++x) {
    if (!subset_contains(s, x)) continue;
    for (Element y = 0; y < n; ++y) {
      if (subset_contains(s, y) && !subset_contains(s, a.prod(x, y))) return false;
      if (a.leq(x, y) && !subset_contains(s, y)) return false;
    }
  }
  return true;
}

/// Filter closed under both implicative extraction rules:
/// (x->y)~>x in I implies x in I, and (x~>y)->x in I implies x in I.
inline bool is_implicative_filter(const FinitePseudoBL& a, CrispSubset s) {
  if (!is_filter(a, s)) return false;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (subset_contains(s, a.sarrow(a.arrow(x, y), x)) && !subset_contains(s, x)) return false;
      if (subset_contains(s, a.arrow(a.sarrow(x, y), x)) && !subset_contains(s, x)) return false;
    }
  return true;
}

/// Filter with x->y in I implying ((y->x)~>x)->y in I, plus the twin rule.
inline bool is_mv_filter(const FinitePseudoBL& a, CrispSubset s) {
  if (!is_filter(a, s)) return false;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (subset_contains(s, a.arrow(x, y)) &&
          !subset_contains(s, a.arrow(a.sarrow(a.arrow(y, x), x), y)))
        return false;
      if (subset_contains(s, a.sarrow(x, y)) &&
          !subset_contains(s, a.sarrow(a.arrow(a.sarrow(y, x), x), y)))
        return false;
    }
  return true;
}

/// Filter with x->(x->y) in I implying x->y in I, plus the twin rule.
inline bool is_g_filter(const FinitePseudoBL& a, CrispSubset s) {
  if (!is_filter(a, s)) return false;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (subset_contains(s, a.arrow(x, a.arrow(x, y))) && !subset_contains(s, a.arrow(x, y)))
        return false;
      if (subset_contains(s, a.sarrow(x, a.sarrow(x, y))) && !subset_contains(s, a.sarrow(x, y)))
        return false;
    }
  return true;
}

/// Every filter, as bitmasks in ascending numeric order. Exhaustive over all
/// 2^n subsets, so the carrier is capped.
inline std::vector<CrispSubset> enumerate_filters(const FinitePseudoBL& a, int max_carrier = 16) {
  if (a.size() > max_carrier)
    throw CarrierTooLargeError("filter enumeration capped at carrier size " +
                               std::to_string(max_carrier));
  std::vector<CrispSubset> out;
  const CrispSubset all = static_cast<CrispSubset>((1ull << a.size()) - 1);
  for (CrispSubset s = 1; s <= all; ++s)
    if (is_filter(a, s)) out.push_back(s);
  return out;
}

inline std::string subset_to_string(const FinitePseudoBL& a, CrispSubset s) {
  std::string out = "{";
  bool first = true;
  for (Element x = 0; x < a.size(); ++x)
    if (subset_contains(s, x)) {
      if (!first) out += ",";
      out += a.name(x);
      first = false;
    }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Text format
//
//   # optional comments anywhere
//   n 3
//   zero 0 one 2
//   meet
//   0 0 0
//   0 1 1
//   0 1 2
//   join ... prod ... arrow ... sarrow ...
//
// Serialization is canonical (single spaces, newline after every row), and
// parse(serialize(A)) reproduces A exactly.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> tokenize_stream(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

inline int parse_int_token(const std::vector<std::string>& toks, std::size_t& pos,
                           const char* what) {
  if (pos >= toks.size()) throw ParseError(std::string("unexpected end of input, expected ") + what);
  const std::string& t = toks[pos++];
  int value = 0;
  for (char c : t) {
    if (c < '0' || c > '9') throw ParseError(std::string("expected ") + what + ", got '" + t + "'");
    value = value * 10 + (c - '0');
    if (value > 1'000'000) throw ParseError(std::string(what) + " out of range: '" + t + "'");
  }
  return value;
}

inline void expect_token(const std::vector<std::string>& toks, std::size_t& pos,
                         const std::string& word) {
  if (pos >= toks.size() || toks[pos] != word)
    throw ParseError("expected '" + word + "'" +
                     (pos < toks.size() ? " but got '" + toks[pos] + "'" : " but input ended"));
  ++pos;
}

}  // namespace detail

inline FinitePseudoBL parse_algebra(std::istream& in) {
  using detail::expect_token;
  using detail::parse_int_token;
  const std::vector<std::string> toks = detail::tokenize_stream(in);
  std::size_t pos = 0;

  expect_token(toks, pos, "n");
  const int n = parse_int_token(toks, pos, "carrier size");
  if (n < 2) throw ParseError("carrier size must be at least 2");
  expect_token(toks, pos, "zero");
  const int zero = parse_int_token(toks, pos, "zero index");
  expect_token(toks, pos, "one");
  const int one = parse_int_token(toks, pos, "one index");

  const auto read_table = [&](const char* header) {
    expect_token(toks, pos, header);
    FinitePseudoBL::Table t;
    t.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) {
      const int e = parse_int_token(toks, pos, "table entry");
      if (e >= n) throw ParseError(std::string(header) + " entry out of range");
      t.push_back(e);
    }
    return t;
  };

  FinitePseudoBL::Table meet = read_table("meet");
  FinitePseudoBL::Table join = read_table("join");
  FinitePseudoBL::Table prod = read_table("prod");
  FinitePseudoBL::Table arrow = read_table("arrow");
  FinitePseudoBL::Table sarrow = read_table("sarrow");
  if (pos != toks.size()) throw ParseError("trailing tokens after sarrow table");
  if (zero >= n || one >= n) throw ParseError("designated constant out of range");
  return FinitePseudoBL(n, std::move(meet), std::move(join), std::move(prod), std::move(arrow),
                        std::move(sarrow), zero, one);
}

inline std::string serialize_algebra(const FinitePseudoBL& a) {
  std::string out = "n " + std::to_string(a.size()) + "\n";
  out += "zero " + std::to_string(a.zero()) + " one " + std::to_string(a.one()) + "\n";
  const auto emit = [&](const char* header, const FinitePseudoBL::Table& t) {
    out += header;
    out += "\n";
    for (int x = 0; x < a.size(); ++x) {
      for (int y = 0; y < a.size(); ++y) {
        if (y) out += " ";
        out += std::to_string(t[static_cast<std::size_t>(x) * a.size() + y]);
      }
      out += "\n";
    }
  };
  emit("meet", a.meet_table());
  emit("join", a.join_table());
  emit("prod", a.prod_table());
  emit("arrow", a.arrow_table());
  emit("sarrow", a.sarrow_table());
  return out;
}

}  // namespace pbl
