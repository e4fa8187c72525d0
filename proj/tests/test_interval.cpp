#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "catch2/catch_amalgamated.hpp"
#include "pbl/errors.hpp"
#include "pbl/interval.hpp"

using pbl::ExceedRule;
using pbl::IntervalNumber;
using pbl::Rational;

namespace {

IntervalNumber iv(const char* text) { return pbl::parse_interval(text); }

}  // namespace

TEST_CASE("rational arithmetic agrees with an arbitrary-precision oracle") {
  using boost::multiprecision::cpp_rational;
  std::mt19937 rng(20240819);
  std::uniform_int_distribution<std::int64_t> num_dist(-50, 50);
  std::uniform_int_distribution<std::int64_t> den_dist(1, 50);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t an = num_dist(rng), ad = den_dist(rng);
    const std::int64_t bn = num_dist(rng), bd = den_dist(rng);
    const Rational a(an, ad), b(bn, bd);
    const cpp_rational oa(an, ad), ob(bn, bd);

    const auto agree = [](const Rational& r, const cpp_rational& o) {
      return numerator(o).convert_to<std::int64_t>() == r.num() &&
             denominator(o).convert_to<std::int64_t>() == r.den();
    };
    REQUIRE(agree(a + b, cpp_rational(oa + ob)));
    REQUIRE(agree(a - b, cpp_rational(oa - ob)));
    REQUIRE(agree(a * b, cpp_rational(oa * ob)));
    REQUIRE((a < b) == (oa < ob));
    REQUIRE((a == b) == (oa == ob));
  }
}

TEST_CASE("rational parsing accepts integers, decimals, and fractions") {
  CHECK(Rational::parse("3") == Rational(3, 1));
  CHECK(Rational::parse("0.35") == Rational(7, 20));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("7/20") == Rational(7, 20));
  CHECK(Rational::parse("1.50") == Rational(3, 2));
  CHECK(Rational::parse("0") == Rational(0, 1));

  CHECK_THROWS_AS(Rational::parse(""), pbl::ParseError);
  CHECK_THROWS_AS(Rational::parse("a"), pbl::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), pbl::ParseError);
  CHECK_THROWS_AS(Rational::parse("0.3.4"), pbl::ParseError);
  CHECK_THROWS_AS(Rational::parse("--2"), pbl::ParseError);
}

TEST_CASE("decimal rendering is exact for terminating fractions") {
  CHECK(Rational(7, 20).to_decimal() == "0.35");
  CHECK(Rational(1, 2).to_decimal() == "0.5");
  CHECK(Rational(3, 10).to_decimal() == "0.3");
  CHECK(Rational(1, 20).to_decimal() == "0.05");
  CHECK(Rational(2, 1).to_decimal() == "2");
  CHECK(Rational(0, 5).to_decimal() == "0");
  CHECK(Rational(1, 3).to_decimal() == "1/3");
}

TEST_CASE("interval construction enforces 0 <= lo <= hi <= 1") {
  CHECK_NOTHROW(IntervalNumber(Rational(3, 10), Rational(4, 10)));
  CHECK_THROWS_AS(IntervalNumber(Rational(4, 10), Rational(3, 10)), pbl::Error);
  CHECK_THROWS_AS(IntervalNumber(Rational(1, 2), Rational(3, 2)), pbl::Error);
  CHECK_THROWS_AS(IntervalNumber(Rational(-1, 10), Rational(1, 2)), pbl::Error);

  CHECK(IntervalNumber::zero() == iv("[0,0]"));
  CHECK(IntervalNumber::half() == iv("[0.5,0.5]"));
  CHECK(IntervalNumber::one() == iv("[1,1]"));
  CHECK(IntervalNumber::degenerate(Rational(3, 10)).is_degenerate());
  CHECK_FALSE(iv("[0.3,0.4]").is_degenerate());
}

TEST_CASE("componentwise min, max, complement, and scaling") {
  CHECK(rmin(iv("[0.3,0.4]"), iv("[0.7,0.8]")) == iv("[0.3,0.4]"));
  CHECK(rmax(iv("[0.2,0.6]"), iv("[0.4,0.5]")) == iv("[0.4,0.6]"));
  CHECK(pbl::complement(iv("[0.3,0.4]")) == iv("[0.6,0.7]"));
  CHECK(pbl::scale(Rational(1, 2), iv("[0.4,0.8]")) == iv("[0.2,0.4]"));
  CHECK(pbl::scale(Rational(0, 1), iv("[0.4,0.8]")) == iv("[0,0]"));
  CHECK(pbl::scale(Rational(1, 1), iv("[0.4,0.8]")) == iv("[0.4,0.8]"));
  CHECK_THROWS_AS(pbl::scale(Rational(3, 2), iv("[0.4,0.8]")), pbl::Error);

  CHECK(pbl::complement(pbl::complement(iv("[0.2,0.9]"))) == iv("[0.2,0.9]"));
}

TEST_CASE("sum against [1,1] under both exceed rules") {
  const auto sum_exceeds = [](const char* a, const char* b, ExceedRule rule) {
    return pbl::exceeds_one(pbl::add(iv(a), iv(b)), rule);
  };
  // order-strict: >= in both components and not equal to [1,1]
  CHECK(sum_exceeds("[0.3,0.4]", "[0.7,0.8]", ExceedRule::order_strict));
  CHECK_FALSE(sum_exceeds("[0.5,0.5]", "[0.5,0.5]", ExceedRule::order_strict));
  CHECK_FALSE(sum_exceeds("[0.4,0.7]", "[0.5,0.8]", ExceedRule::order_strict));
  // both-strict: strictly above 1 in each component
  CHECK_FALSE(sum_exceeds("[0.3,0.4]", "[0.7,0.8]", ExceedRule::both_strict));
  CHECK(sum_exceeds("[0.6,0.7]", "[0.5,0.8]", ExceedRule::both_strict));

  // cross-check both rules against direct rational arithmetic on a full grid
  for (const IntervalNumber& a : pbl::grid_intervals(8))
    for (const IntervalNumber& b : pbl::grid_intervals(8)) {
      const Rational lo = a.lo() + b.lo();
      const Rational hi = a.hi() + b.hi();
      const Rational one(1, 1);
      const bool order = lo >= one && hi >= one && !(lo == one && hi == one);
      const bool strict = lo > one && hi > one;
      CHECK(pbl::exceeds_one(pbl::add(a, b), ExceedRule::order_strict) == order);
      CHECK(pbl::exceeds_one(pbl::add(a, b), ExceedRule::both_strict) == strict);
    }
}

TEST_CASE("interval order: leq componentwise, lt as its strict part") {
  CHECK(leq(iv("[0.3,0.4]"), iv("[0.3,0.4]")));
  CHECK(leq(iv("[0.2,0.4]"), iv("[0.3,0.4]")));
  CHECK_FALSE(leq(iv("[0.2,0.5]"), iv("[0.3,0.4]")));

  CHECK(lt(iv("[0.3,0.5]"), iv("[0.5,0.5]")));
  CHECK(lt(iv("[0.3,0.4]"), iv("[0.3,0.5]")));
  CHECK_FALSE(lt(iv("[0.3,0.4]"), iv("[0.3,0.4]")));
  CHECK_FALSE(lt(iv("[0.4,0.6]"), iv("[0.5,0.5]")));  // incomparable
  CHECK_FALSE(lt(iv("[0.5,0.5]"), iv("[0.4,0.6]")));
}

TEST_CASE("pointwise infimum and supremum over collections") {
  const std::vector<IntervalNumber> xs = {iv("[0.2,0.8]"), iv("[0.6,0.6]"), iv("[0.3,0.9]")};
  CHECK(pbl::rinf(xs) == iv("[0.2,0.6]"));
  CHECK(pbl::rsup(xs) == iv("[0.6,0.9]"));

  const std::vector<IntervalNumber> single = {iv("[0.3,0.4]")};
  CHECK(pbl::rinf(single) == iv("[0.3,0.4]"));
  CHECK(pbl::rsup(single) == iv("[0.3,0.4]"));

  const std::vector<IntervalNumber> empty;
  CHECK_THROWS_AS(pbl::rinf(empty), pbl::EmptyCollectionError);
  CHECK_THROWS_AS(pbl::rsup(empty), pbl::EmptyCollectionError);
}

TEST_CASE("lattice laws hold exhaustively on the denominator-8 grid") {
  const std::vector<IntervalNumber> all = pbl::grid_intervals(8);
  REQUIRE(all.size() == 45);

  for (const IntervalNumber& a : all) {
    CHECK(rmin(a, a) == a);
    CHECK(rmax(a, a) == a);
    CHECK(rmin(a, IntervalNumber::one()) == a);
    CHECK(rmax(a, IntervalNumber::zero()) == a);
    for (const IntervalNumber& b : all) {
      CHECK(rmin(a, b) == rmin(b, a));
      CHECK(rmax(a, b) == rmax(b, a));
      CHECK(rmin(a, rmax(a, b)) == a);
      CHECK(rmax(a, rmin(a, b)) == a);
      CHECK(leq(a, b) == (rmin(a, b) == a));
      CHECK(leq(a, b) == (rmax(a, b) == b));
      for (const IntervalNumber& c : all) {
        CHECK(rmin(rmin(a, b), c) == rmin(a, rmin(b, c)));
        CHECK(rmax(rmax(a, b), c) == rmax(a, rmax(b, c)));
      }
    }
  }
}

TEST_CASE("grid enumeration is complete, ordered, and duplicate-free") {
  const auto g20 = pbl::grid_intervals(20);
  CHECK(g20.size() == 231);
  const auto g10 = pbl::grid_intervals(10);
  CHECK(g10.size() == 66);

  for (std::size_t i = 1; i < g20.size(); ++i) {
    const auto& p = g20[i - 1];
    const auto& q = g20[i];
    const bool lex_less = p.lo() < q.lo() || (p.lo() == q.lo() && p.hi() < q.hi());
    CHECK(lex_less);
  }
}

TEST_CASE("eleven of the fifteen default-grid intervals are dichotomous") {
  const std::vector<Rational> endpoints = {Rational(0, 1), Rational(3, 10), Rational(1, 2),
                                           Rational(7, 10), Rational(1, 1)};
  const IntervalNumber half = IntervalNumber::half();
  std::vector<std::string> dichotomous;
  for (std::size_t i = 0; i < endpoints.size(); ++i)
    for (std::size_t j = i; j < endpoints.size(); ++j) {
      const IntervalNumber v(endpoints[i], endpoints[j]);
      if (lt(v, half) || leq(half, v)) dichotomous.push_back(pbl::to_string(v));
    }
  const std::vector<std::string> expected = {
      "[0,0]",     "[0,0.3]",   "[0,0.5]",   "[0.3,0.3]", "[0.3,0.5]", "[0.5,0.5]",
      "[0.5,0.7]", "[0.5,1]",   "[0.7,0.7]", "[0.7,1]",   "[1,1]"};
  CHECK(dichotomous == expected);
}

TEST_CASE("interval literals round-trip through text") {
  for (const IntervalNumber& v : pbl::grid_intervals(10))
    CHECK(pbl::parse_interval(pbl::to_string(v)) == v);

  CHECK(iv("[0.3,0.4]").lo() == Rational(3, 10));
  CHECK(pbl::to_string(iv("[0.5,1]")) == "[0.5,1]");

  CHECK_THROWS_AS(pbl::parse_interval("0.3,0.4"), pbl::ParseError);
  CHECK_THROWS_AS(pbl::parse_interval("[0.4,0.3]"), pbl::ParseError);
  CHECK_THROWS_AS(pbl::parse_interval("[0,2]"), pbl::ParseError);
  CHECK_THROWS_AS(pbl::parse_interval("[a,b]"), pbl::ParseError);
  CHECK_THROWS_AS(pbl::parse_interval("[0.3 0.4]"), pbl::ParseError);
}
