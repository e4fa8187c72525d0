#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pbl/algebra.hpp"
#include "pbl/errors.hpp"
#include "pbl/filters.hpp"
#include "pbl/fuzzy.hpp"
#include "pbl/interval.hpp"

namespace pbl {

/**
 * The six scalar implication operators, by their usual names:
 *
 *   early_zadeh (m)           max(1-a, min(a, b))
 *   lukasiewicz (a)           min(1, 1-a+b)
 *   godel (g)                 1 if a <= b else b
 *   contraposition_godel (cg) 1 if a <= b else 1-a
 *   gaines_rescher (gr)       1 if a <= b else 0
 *   kleene_dienes (b)         max(1-a, b)
 */
enum class ImplicationOperator {
  early_zadeh,
  lukasiewicz,
  godel,
  contraposition_godel,
  gaines_rescher,
  kleene_dienes,
};

inline const std::vector<std::pair<std::string, ImplicationOperator>>& implication_operators() {
  static const std::vector<std::pair<std::string, ImplicationOperator>> ops = {
      {"m", ImplicationOperator::early_zadeh},
      {"a", ImplicationOperator::lukasiewicz},
      {"g", ImplicationOperator::godel},
      {"cg", ImplicationOperator::contraposition_godel},
      {"gr", ImplicationOperator::gaines_rescher},
      {"b", ImplicationOperator::kleene_dienes},
  };
  return ops;
}

inline std::string to_string(ImplicationOperator op) {
  for (const auto& [name, o] : implication_operators())
    if (o == op) return name;
  return "?";
}

inline ImplicationOperator implication_operator_from_string(const std::string& name) {
  for (const auto& [n, o] : implication_operators())
    if (n == name) return o;
  throw ParseError("unknown implication operator '" + name + "' (expected m|a|g|cg|gr|b)");
}

inline Rational apply_scalar(ImplicationOperator op, const Rational& a, const Rational& b) {
  const Rational one(1, 1);
  const Rational na = one - a;
  switch (op) {
    case ImplicationOperator::early_zadeh: {
      const Rational inner = a < b ? a : b;
      return na < inner ? inner : na;
    }
    case ImplicationOperator::lukasiewicz: {
      const Rational sum = na + b;
      return sum < one ? sum : one;
    }
    case ImplicationOperator::godel:
      return a <= b ? one : b;
    case ImplicationOperator::contraposition_godel:
      return a <= b ? one : na;
    case ImplicationOperator::gaines_rescher:
      return a <= b ? one : Rational(0, 1);
    case ImplicationOperator::kleene_dienes:
      return na < b ? b : na;
  }
  throw Error("unreachable implication operator");
}

/// Count of endpoint swaps performed while lifting implications to intervals.
struct LiftCounters {
  long long swaps = 0;
};

/**
 * Componentwise lift [I(a.lo, b.lo), I(a.hi, b.hi)], normalized by swapping
 * when the raw endpoints come out inverted. Inversion is routine for the
 * right-discontinuous operators (e.g. I_gr([0.5,0.9], [0.5,0.5]) is raw
 * [1, 0]), so callers interested in how often it happens pass counters.
 */
inline IntervalNumber apply(ImplicationOperator op, const IntervalNumber& a,
                            const IntervalNumber& b, LiftCounters* counters = nullptr) {
  Rational lo = apply_scalar(op, a.lo(), b.lo());
  Rational hi = apply_scalar(op, a.hi(), b.hi());
  if (lo > hi) {
    std::swap(lo, hi);
    if (counters) ++counters->swaps;
  }
  return IntervalNumber(lo, hi);
}

// ---------------------------------------------------------------------------
// Propositions about membership, and their truth values.
//
// [x in F] = F(x), [not P] = complement, [P and Q] = rmin, [P or Q] = rmax,
// [P -> Q] = the chosen implication (lukasiewicz unless overridden),
// [forall x P] = rinf over the carrier. A proposition is a tautology when its
// truth value is [1,1], and a t-tautology when it is >= t everywhere.
// ---------------------------------------------------------------------------

enum class AlgebraOp { meet, join, prod, arrow, sarrow };

/// Element-valued expression over named variables.
class Term {
 public:
  static Term var(std::string name) {
    Term t;
    t.node_ = std::make_shared<Node>(Node{std::move(name), AlgebraOp::meet, nullptr, nullptr});
    return t;
  }

  static Term apply(AlgebraOp op, Term lhs, Term rhs) {
    Term t;
    t.node_ = std::make_shared<Node>(
        Node{{}, op, std::make_shared<Term>(std::move(lhs)), std::make_shared<Term>(std::move(rhs))});
    return t;
  }

  Element eval(const FinitePseudoBL& a, const std::map<std::string, Element>& env) const {
    if (!node_->lhs) {
      const auto it = env.find(node_->variable);
      if (it == env.end()) throw UnboundVariableError("unbound variable '" + node_->variable + "'");
      return it->second;
    }
    const Element l = node_->lhs->eval(a, env);
    const Element r = node_->rhs->eval(a, env);
    switch (node_->op) {
      case AlgebraOp::meet: return a.meet(l, r);
      case AlgebraOp::join: return a.join(l, r);
      case AlgebraOp::prod: return a.prod(l, r);
      case AlgebraOp::arrow: return a.arrow(l, r);
      case AlgebraOp::sarrow: return a.sarrow(l, r);
    }
    throw Error("unreachable term op");
  }

 private:
  struct Node {
    std::string variable;
    AlgebraOp op;
    std::shared_ptr<Term> lhs, rhs;
  };
  std::shared_ptr<const Node> node_;
};

using Assignment = std::map<std::string, Element>;

/// Formula built from membership atoms with not / and / or / implies / forall.
class Prop {
 public:
  static Prop member(Term t) { return make(Kind::member, std::move(t), {}, {}, {}); }
  static Prop negation(Prop p) { return make(Kind::negation, {}, std::move(p), {}, {}); }
  static Prop conjunction(Prop p, Prop q) {
    return make(Kind::conjunction, {}, std::move(p), std::move(q), {});
  }
  static Prop disjunction(Prop p, Prop q) {
    return make(Kind::disjunction, {}, std::move(p), std::move(q), {});
  }
  static Prop implies(Prop p, Prop q) {
    return make(Kind::implication, {}, std::move(p), std::move(q), {});
  }
  static Prop forall(std::string variable, Prop body) {
    return make(Kind::forall, {}, std::move(body), {}, std::move(variable));
  }

  IntervalNumber truth(const FinitePseudoBL& a, const IVFuzzySet& f, Assignment& env,
                       ImplicationOperator arrow_op, LiftCounters* counters) const {
    switch (node_->kind) {
      case Kind::member:
        return f(node_->term.eval(a, env));
      case Kind::negation:
        return complement(node_->lhs->truth(a, f, env, arrow_op, counters));
      case Kind::conjunction:
        return rmin(node_->lhs->truth(a, f, env, arrow_op, counters),
                    node_->rhs->truth(a, f, env, arrow_op, counters));
      case Kind::disjunction:
        return rmax(node_->lhs->truth(a, f, env, arrow_op, counters),
                    node_->rhs->truth(a, f, env, arrow_op, counters));
      case Kind::implication:
        return apply(arrow_op, node_->lhs->truth(a, f, env, arrow_op, counters),
                     node_->rhs->truth(a, f, env, arrow_op, counters), counters);
      case Kind::forall: {
        std::vector<IntervalNumber> vals;
        vals.reserve(static_cast<std::size_t>(a.size()));
        const auto previous = env.find(node_->variable);
        const bool had_binding = previous != env.end();
        const Element saved = had_binding ? previous->second : 0;
        for (Element x = 0; x < a.size(); ++x) {
          env[node_->variable] = x;
          vals.push_back(node_->lhs->truth(a, f, env, arrow_op, counters));
        }
        if (had_binding)
          env[node_->variable] = saved;
        else
          env.erase(node_->variable);
        return rinf(vals);
      }
    }
    throw Error("unreachable proposition kind");
  }

 private:
  enum class Kind { member, negation, conjunction, disjunction, implication, forall };

  struct Node {
    Kind kind;
    Term term;  // member only
    std::shared_ptr<Prop> lhs, rhs;
    std::string variable;  // forall only
  };

  static Prop make(Kind kind, Term term, std::optional<Prop> lhs, std::optional<Prop> rhs,
                   std::string variable) {
    Prop p;
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->term = std::move(term);
    if (lhs) node->lhs = std::make_shared<Prop>(std::move(*lhs));
    if (rhs) node->rhs = std::make_shared<Prop>(std::move(*rhs));
    node->variable = std::move(variable);
    p.node_ = std::move(node);
    return p;
  }

  std::shared_ptr<const Node> node_;
};

inline IntervalNumber truth_value(const Prop& p, const FinitePseudoBL& a, const IVFuzzySet& f,
                                  const Assignment& env,
                                  ImplicationOperator arrow_op = ImplicationOperator::lukasiewicz,
                                  LiftCounters* counters = nullptr) {
  if (a.size() != f.carrier_size())
    throw CarrierMismatchError("formula evaluation with mismatched carrier sizes");
  Assignment mutable_env = env;
  return p.truth(a, f, mutable_env, arrow_op, counters);
}

namespace detail {

/// x in F and y in F -> x.y in F, etc.: the four formulas of the fuzzifying
/// notion, with the two free variables "x", "y".
struct ImplicativeFormulas {
  Prop closure;      // (x in F and y in F) -> x.y in F
  Prop monotone;     // x in F -> y in F, used only for pairs with x <= y
  Prop extract_a;    // (x->y)~>x in F -> x in F
  Prop extract_s;    // (x~>y)->x in F -> x in F

  static const ImplicativeFormulas& instance() {
    static const ImplicativeFormulas f = [] {
      const Term x = Term::var("x"), y = Term::var("y");
      ImplicativeFormulas out{
          Prop::implies(Prop::conjunction(Prop::member(x), Prop::member(y)),
                        Prop::member(Term::apply(AlgebraOp::prod, x, y))),
          Prop::implies(Prop::member(x), Prop::member(y)),
          Prop::implies(
              Prop::member(Term::apply(AlgebraOp::sarrow, Term::apply(AlgebraOp::arrow, x, y), x)),
              Prop::member(x)),
          Prop::implies(
              Prop::member(Term::apply(AlgebraOp::arrow, Term::apply(AlgebraOp::sarrow, x, y), x)),
              Prop::member(x)),
      };
      return out;
    }();
    return f;
  }
};

}  // namespace detail

/**
 * Fuzzifying implicative filter: the four defining formulas are Lukasiewicz
 * tautologies ([P] = [1,1] under every assignment). Tags "F18".."F21".
 */
inline FilterVerdict is_fuzzifying_implicative_filter(const FinitePseudoBL& a,
                                                      const IVFuzzySet& f) {
  const auto& forms = detail::ImplicativeFormulas::instance();
  const IntervalNumber top = IntervalNumber::one();
  const auto run = [&](const Prop& p, const char* tag, bool ordered_only) -> FilterVerdict {
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y) {
        if (ordered_only && !a.leq(x, y)) continue;
        if (truth_value(p, a, f, {{"x", x}, {"y", y}}) != top)
          return FilterVerdict::fail(tag, {{x, y}, {}});
      }
    return FilterVerdict::pass();
  };
  if (auto v = run(forms.closure, "F18", false); !v) return v;
  if (auto v = run(forms.monotone, "F19", true); !v) return v;
  if (auto v = run(forms.extract_a, "F20", false); !v) return v;
  if (auto v = run(forms.extract_s, "F21", false); !v) return v;
  return FilterVerdict::pass();
}

inline void require_tautology_threshold(const IntervalNumber& t) {
  if (t == IntervalNumber::zero())
    throw BadThresholdsError("tautology threshold must exceed [0,0]");
}

/**
 * t-tautology route: the same four formulas evaluated with the given
 * implication operator must reach truth value >= t under every assignment.
 * Tags "F22".."F25".
 */
inline FilterVerdict is_t_implication_filter_semantic(const FinitePseudoBL& a, const IVFuzzySet& f,
                                                      const IntervalNumber& t,
                                                      ImplicationOperator op) {
  require_tautology_threshold(t);
  const auto& forms = detail::ImplicativeFormulas::instance();
  const auto run = [&](const Prop& p, const char* tag, bool ordered_only) -> FilterVerdict {
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y) {
        if (ordered_only && !a.leq(x, y)) continue;
        if (!leq(t, truth_value(p, a, f, {{"x", x}, {"y", y}}, op)))
          return FilterVerdict::fail(tag, {{x, y}, {}});
      }
    return FilterVerdict::pass();
  };
  if (auto v = run(forms.closure, "F22", false); !v) return v;
  if (auto v = run(forms.monotone, "F23", true); !v) return v;
  if (auto v = run(forms.extract_a, "F24", false); !v) return v;
  if (auto v = run(forms.extract_s, "F25", false); !v) return v;
  return FilterVerdict::pass();
}

/**
 * Direct route: the same conditions written as pointwise inequalities on
 * lifted implications. Tags "F26".."F29":
 *
 *   (F26) t <= I(rmin(F(x), F(y)), F(x.y))
 *   (F27) t <= I(F(x), F(y)) for x <= y
 *   (F28) t <= I(F((x->y)~>x), F(x))
 *   (F29) t <= I(F((x~>y)->x), F(x))
 */
inline FilterVerdict is_t_implication_based_implicative_filter(const FinitePseudoBL& a,
                                                               const IVFuzzySet& f,
                                                               const IntervalNumber& t,
                                                               ImplicationOperator op) {
  require_tautology_threshold(t);
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (!leq(t, apply(op, rmin(f(x), f(y)), f(a.prod(x, y)))))
        return FilterVerdict::fail("F26", {{x, y}, {}});
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && !leq(t, apply(op, f(x), f(y))))
        return FilterVerdict::fail("F27", {{x, y}, {}});
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (!leq(t, apply(op, f(a.sarrow(a.arrow(x, y), x)), f(x))))
        return FilterVerdict::fail("F28", {{x, y}, {}});
      if (!leq(t, apply(op, f(a.arrow(a.sarrow(x, y), x)), f(x))))
        return FilterVerdict::fail("F29", {{x, y}, {}});
    }
  return FilterVerdict::pass();
}

/**
 * The threshold correspondences for 0.5-implication-based implicative
 * filters: with t = [0.5,0.5],
 *
 *   gaines_rescher       <->  threshold implicative filter at ([0,0], [1,1])
 *   godel                <->  threshold implicative filter at ([0,0], [0.5,0.5])
 *   contraposition_godel <->  threshold implicative filter at ([0.5,0.5], [1,1])
 */
enum class Theorem54Variant { gaines_rescher, godel, contraposition_godel };

struct EquivalenceVerdict {
  bool agree = true;
  bool lhs = false;  // implication-based side
  bool rhs = false;  // threshold-filter side
  std::string detail;
};

inline EquivalenceVerdict check_theorem_5_4(const FinitePseudoBL& a, const IVFuzzySet& f,
                                            Theorem54Variant variant) {
  const IntervalNumber h = IntervalNumber::half();
  ImplicationOperator op{};
  IntervalNumber alpha = IntervalNumber::zero(), beta = IntervalNumber::one();
  switch (variant) {
    case Theorem54Variant::gaines_rescher:
      op = ImplicationOperator::gaines_rescher;
      break;
    case Theorem54Variant::godel:
      op = ImplicationOperator::godel;
      beta = h;
      break;
    case Theorem54Variant::contraposition_godel:
      op = ImplicationOperator::contraposition_godel;
      alpha = h;
      break;
  }
  EquivalenceVerdict out;
  const FilterVerdict lhs = is_t_implication_based_implicative_filter(a, f, h, op);
  const FilterVerdict rhs = is_threshold_implicative_filter(a, f, alpha, beta);
  out.lhs = lhs.holds;
  out.rhs = rhs.holds;
  out.agree = lhs.holds == rhs.holds;
  if (!out.agree) {
    const FilterVerdict& failing = lhs.holds ? rhs : lhs;
    out.detail = std::string(lhs.holds ? "only implication side holds; " : "only threshold side holds; ") +
                 describe(failing, a);
  }
  return out;
}

}  // namespace pbl
