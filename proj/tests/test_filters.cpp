#include <initializer_list>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "pbl/algebra.hpp"
#include "pbl/errors.hpp"
#include "pbl/filters.hpp"
#include "pbl/fuzzy.hpp"

using pbl::Element;
using pbl::FilterVerdict;
using pbl::FinitePseudoBL;
using pbl::IntervalNumber;
using pbl::IVFuzzySet;

namespace {

IntervalNumber iv(const char* text) { return pbl::parse_interval(text); }

IVFuzzySet mk(std::initializer_list<const char*> vs) {
  std::vector<IntervalNumber> vals;
  for (const char* s : vs) vals.push_back(pbl::parse_interval(s));
  return IVFuzzySet(std::move(vals), IVFuzzySet::Dichotomy::allow_nondichotomous);
}

// high on the filter {1}, low elsewhere: an (in, in-or-q)-fuzzy filter on
// every algebra
IVFuzzySet ex34() { return mk({"[0.3,0.4]", "[0.3,0.4]", "[0.7,0.8]"}); }
// high on {a,1}: indicator of the implicative filter of the 3-chain
IVFuzzySet upper_ind() { return mk({"[0.3,0.4]", "[0.7,0.8]", "[0.7,0.8]"}); }
// high below, low on top: breaks monotonicity everywhere
IVFuzzySet breach() { return mk({"[0.7,0.8]", "[0.7,0.8]", "[0.3,0.4]"}); }

void expect_fail(const FilterVerdict& v, const char* condition,
                 std::vector<Element> elements) {
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.violated_condition.has_value());
  CHECK(*v.violated_condition == condition);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->elements == elements);
}

}  // namespace

TEST_CASE("scalar filter conditions on degenerate-valued sets") {
  const FinitePseudoBL g3 = pbl::godel_chain(3);

  CHECK(pbl::is_fuzzy_filter_scalar(g3, mk({"[0.3,0.3]", "[0.3,0.3]", "[0.7,0.7]"})).holds);
  expect_fail(pbl::is_fuzzy_filter_scalar(g3, mk({"[0.7,0.7]", "[0.7,0.7]", "[0.3,0.3]"})),
              "scalar-filter(ii)", {0, 2});

  CHECK_THROWS_AS(pbl::is_fuzzy_filter_scalar(g3, ex34()), pbl::NonScalarSetError);

  // {a,1} is an implicative filter of the 3-chain, {1} is not
  CHECK(pbl::is_fuzzy_implicative_filter_scalar(g3, mk({"[0,0]", "[1,1]", "[1,1]"})).holds);
  expect_fail(pbl::is_fuzzy_implicative_filter_scalar(g3, mk({"[0,0]", "[0,0]", "[1,1]"})),
              "scalar-implicative(iii)", {1, 0});
}

TEST_CASE("interval filter conditions (F1),(F2)") {
  const FinitePseudoBL g3 = pbl::godel_chain(3);
  const FinitePseudoBL l3 = pbl::lukasiewicz_chain(3);

  CHECK(pbl::is_iv_fuzzy_filter(g3, ex34()).holds);
  CHECK(pbl::is_iv_fuzzy_filter(g3, IVFuzzySet::constant(3, iv("[1,1]"))).holds);
  CHECK(pbl::is_iv_fuzzy_filter(g3, mk({"[0,0]", "[1,1]", "[1,1]"})).holds);

  expect_fail(pbl::is_iv_fuzzy_filter(g3, breach()), "F2", {0, 2});
  // a.a = 0 on the three-element Lukasiewicz chain, so F1 needs F(0) high
  expect_fail(pbl::is_iv_fuzzy_filter(l3, mk({"[0,0]", "[0.7,0.8]", "[0.7,0.8]"})), "F1", {1, 1});
}

TEST_CASE("pointwise conditions (F3),(F4) over the canonical threshold grid") {
  const FinitePseudoBL g3 = pbl::godel_chain(3);

  const auto run = [&](const IVFuzzySet& f) {
    const auto grid = pbl::pointwise_threshold_grid(f);
    return pbl::is_iv_evq_fuzzy_filter_pointwise(g3, f, grid);
  };

  CHECK(run(ex34()).holds);
  CHECK(run(IVFuzzySet::constant(3, iv("[1,1]"))).holds);

  // the guessed witness [0.7,0.8] at a<=1 is rescued by quasi-coincidence
  // ([0.3,0.4]+[0.7,0.8] = [1.0,1.2] exceeds [1,1]); the genuine breach is
  // the midpoint threshold
  const FilterVerdict v = run(breach());
  expect_fail(v, "F4", {0, 2});
  REQUIRE(v.witness->thresholds.size() == 1);
  CHECK(v.witness->thresholds[0] == iv("[0.5,0.5]"));

  const auto grid = pbl::pointwise_threshold_grid(ex34());
  REQUIRE(grid.size() == 4);
  CHECK(grid[0] == iv("[0.3,0.4]"));
  CHECK(grid[1] == iv("[0.5,0.5]"));
  CHECK(grid[2] == iv("[0.7,0.8]"));
  CHECK(grid[3] == iv("[1,1]"));
}

TEST_CASE("the pointwise definition agrees with (F5),(F6) on dichotomous sets") {
  const pbl::IVFuzzySetEnumerator en(
      3, {pbl::Rational(0, 1), pbl::Rational(3, 10), pbl::Rational(1, 2), pbl::Rational(7, 10),
          pbl::Rational(1, 1)});
  for (const FinitePseudoBL& a : {pbl::godel_chain(3), pbl::lukasiewicz_chain(3)})
    for (std::uint64_t i = 0; i < en.count(); ++i) {
      const IVFuzzySet f = en.at(i);
      const auto grid = pbl::pointwise_threshold_grid(f);
      CHECK(pbl::is_iv_evq_fuzzy_filter_pointwise(a, f, grid).holds ==
            pbl::is_iv_evq_fuzzy_filter(a, f).holds);
    }
}

TEST_CASE("inequality conditions (F5),(F6)") {
  const FinitePseudoBL g3 = pbl::godel_chain(3);

  CHECK(pbl::is_iv_evq_fuzzy_filter(g3, ex34()).holds);
  CHECK(pbl::is_iv_evq_fuzzy_filter(g3, mk({"[0,0.3]", "[0.3,0.5]", "[0.5,0.5]"})).holds);
  expect_fail(pbl::is_iv_evq_fuzzy_filter(g3, breach()), "F6", {0, 2});

  const FinitePseudoBL l3 = pbl::lukasiewicz_chain(3);
  expect_fail(pbl::is_iv_evq_fuzzy_filter(l3, mk({"[0,0]", "[0.7,0.8]", "[0.7,0.8]"})), "F5",
              {1, 1});
}

TEST_CASE("the residuum forms (F7),(F8),(F8') agree with (F5),(F6)") {
  const FinitePseudoBL g3 = pbl::godel_chain(3);
  CHECK(pbl::satisfies_prop_3_6(g3, ex34()).holds);
  expect_fail(pbl::satisfies_prop_3_6(g3, breach()), "F7", {0});

  // pointwise equivalence across the whole dichotomous family
  const pbl::IVFuzzySetEnumerator en(
      3, {pbl::Rational(0, 1), pbl::Rational(3, 10), pbl::Rational(1, 2), pbl::Rational(7, 10),
          pbl::Rational(1, 1)});
  for (const FinitePseudoBL& a : {g3, pbl::lukasiewicz_chain(3)})
    for (std::uint64_t i = 0; i < en.count(); ++i) {
      const IVFuzzySet f = en.at(i);
      CHECK(pbl::satisfies_prop_3_6(a, f).holds == pbl::is_iv_evq_fuzzy_filter(a, f).holds);
    }
}

TEST_CASE("level-style conditions (F9),(F10)") {
  const FinitePseudoBL g2 = pbl::godel_chain(2);
  const FinitePseudoBL g3 = pbl::godel_chain(3);

  CHECK(pbl::satisfies_F9_F10(g3, ex34()).holds);
  CHECK(pbl::satisfies_F9_F10(g3, IVFuzzySet::constant(3, iv("[1,1]"))).holds);
  // a high value below a [0.5,0.5] top violates (F10): rmax{[0.5,0.5],
  // [0.5,0.5]} does not dominate [0.7,0.8]
  expect_fail(pbl::satisfies_F9_F10(g2, mk({"[0.7,0.8]", "[0.5,0.5]"})), "F10", {0, 1});
  expect_fail(pbl::satisfies_F9_F10(g3, breach()), "F10", {0, 2});
}

TEST_CASE("threshold conditions (F11),(F12) specialize to (F5),(F6) and (F1),(F2)") {
  const pbl::IVFuzzySetEnumerator en(
      3, {pbl::Rational(0, 1), pbl::Rational(3, 10), pbl::Rational(1, 2), pbl::Rational(7, 10),
          pbl::Rational(1, 1)});
  const IntervalNumber zero = IntervalNumber::zero();
  const IntervalNumber half = IntervalNumber::half();
  const IntervalNumber one = IntervalNumber::one();

  for (const FinitePseudoBL& a : {pbl::godel_chain(3), pbl::lukasiewicz_chain(3)})
    for (std::uint64_t i = 0; i < en.count(); ++i) {
      const IVFuzzySet f = en.at(i);
      CHECK(pbl::is_threshold_fuzzy_filter(a, f, zero, half).holds ==
            pbl::is_iv_evq_fuzzy_filter(a, f).holds);
      CHECK(pbl::is_threshold_fuzzy_filter(a, f, zero, one).holds ==
            pbl::is_iv_fuzzy_filter(a, f).holds);
    }

  const FinitePseudoBL g3 = pbl::godel_chain(3);
  CHECK(pbl::is_threshold_fuzzy_filter(g3, ex34(), iv("[0.3,0.3]"), iv("[0.7,0.7]")).holds);
  CHECK_THROWS_AS(pbl::is_threshold_fuzzy_filter(g3, ex34(), half, half),
                  pbl::BadThresholdsError);
  CHECK_THROWS_AS(pbl::is_threshold_fuzzy_filter(g3, ex34(), one, zero),
                  pbl::BadThresholdsError);
  CHECK_THROWS_AS(pbl::is_threshold_fuzzy_filter(g3, ex34(), iv("[0.3,0.6]"), iv("[0.4,0.5]")),
                  pbl::BadThresholdsError);
}

TEST_CASE("implicative conditions (F13)") {
  const FinitePseudoBL g3 = pbl::godel_chain(3);
  const FinitePseudoBL l3 = pbl::lukasiewicz_chain(3);

  CHECK(pbl::is_iv_evq_implicative_filter(g3, upper_ind()).holds);
  CHECK(pbl::is_iv_evq_implicative_filter(g3, IVFuzzySet::constant(3, iv("[1,1]"))).holds);

  // {1} is not an implicative filter of the Lukasiewicz chain: (a->0)~>a = 1
  expect_fail(pbl::is_iv_evq_implicative_filter(l3, ex34()), "F13a", {1, 0});
  // a failing (F5),(F6) base short-circuits with the base condition
  expect_fail(pbl::is_iv_evq_implicative_filter(g3, breach()), "F6", {0, 2});
}

TEST_CASE("the eight residuum inequalities track implicativity") {
  const FinitePseudoBL g3 = pbl::godel_chain(3);
  const FinitePseudoBL l3 = pbl::lukasiewicz_chain(3);

  CHECK(pbl::check_prop_4_2(g3, upper_ind()).holds);
  expect_fail(pbl::check_prop_4_2(g3, ex34()), "P4.2(2a)", {0, 1});
  expect_fail(pbl::check_prop_4_2(l3, ex34()), "P4.2(1a)", {1, 0});
}

TEST_CASE("upper-bound conditions (F14) and thresholds (F15)") {
  const FinitePseudoBL g3 = pbl::godel_chain(3);
  const FinitePseudoBL l3 = pbl::lukasiewicz_chain(3);

  CHECK(pbl::satisfies_F14(g3, upper_ind()).holds);
  expect_fail(pbl::satisfies_F14(g3, ex34()), "F14a", {1, 0});
  expect_fail(pbl::satisfies_F14(l3, ex34()), "F14a", {1, 0});

  CHECK(pbl::is_threshold_implicative_filter(g3, upper_ind(), iv("[0.3,0.3]"), iv("[0.7,0.7]"))
            .holds);
  expect_fail(
      pbl::is_threshold_implicative_filter(l3, ex34(), iv("[0.3,0.3]"), iv("[0.7,0.7]")),
      "F15a", {1, 0});
  CHECK_THROWS_AS(pbl::is_threshold_implicative_filter(g3, ex34(), IntervalNumber::half(),
                                                       IntervalNumber::half()),
                  pbl::BadThresholdsError);
}

TEST_CASE("MV and G conditions (F16),(F17) separate the two chains") {
  const FinitePseudoBL g3 = pbl::godel_chain(3);
  const FinitePseudoBL l3 = pbl::lukasiewicz_chain(3);

  // {1} is MV but not G on the Lukasiewicz chain, G but not MV on the Godel
  // chain; {a,1} is both on the Godel chain
  expect_fail(pbl::is_iv_evq_mv_filter(g3, ex34()), "F16a", {0, 1});
  CHECK(pbl::is_iv_evq_g_filter(g3, ex34()).holds);
  CHECK(pbl::is_iv_evq_mv_filter(l3, ex34()).holds);
  expect_fail(pbl::is_iv_evq_g_filter(l3, ex34()), "F17a", {1, 0});
  CHECK(pbl::is_iv_evq_mv_filter(g3, upper_ind()).holds);
  CHECK(pbl::is_iv_evq_g_filter(g3, upper_ind()).holds);
}

TEST_CASE("arrow agreement through the fuzzy set") {
  const FinitePseudoBL g3 = pbl::godel_chain(3);
  CHECK(pbl::arrows_agree(g3, ex34()));
  CHECK(pbl::arrows_agree(g3, breach()));
}

TEST_CASE("verdict descriptions name the condition and the witness") {
  const FinitePseudoBL g3 = pbl::godel_chain(3);
  CHECK(pbl::describe(pbl::is_iv_fuzzy_filter(g3, ex34()), g3) == "holds");
  CHECK(pbl::describe(pbl::is_iv_fuzzy_filter(g3, breach()), g3) == "fails F2 at (0,1)");
  const FilterVerdict v = pbl::is_iv_evq_fuzzy_filter_pointwise(
      g3, breach(), pbl::pointwise_threshold_grid(breach()));
  CHECK(pbl::describe(v, g3) == "fails F4 at (0,1) [0.5,0.5]");
}
