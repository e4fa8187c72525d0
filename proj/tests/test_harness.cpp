#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "pbl/algebra.hpp"
#include "pbl/errors.hpp"
#include "pbl/harness.hpp"

using pbl::FinitePseudoBL;
using pbl::IntervalNumber;
using pbl::Rational;
using pbl::SweepConfig;
using pbl::TheoremId;
using pbl::VerificationResult;
using pbl::VerificationStatus;

namespace {

SweepConfig one_algebra(const std::string& descriptor) {
  SweepConfig cfg = SweepConfig::defaults();
  cfg.algebras = {descriptor};
  return cfg;
}

}  // namespace

TEST_CASE("theorem names round-trip") {
  for (const auto& [name, id] : pbl::theorem_names()) {
    CHECK(pbl::to_string(id) == name);
    CHECK(pbl::theorem_from_string(name) == id);
  }
  CHECK(pbl::all_theorems().size() == 18);
  CHECK_THROWS_AS(pbl::theorem_from_string("T999"), pbl::UnknownTheoremError);
  CHECK_THROWS_AS(pbl::theorem_from_string("t3.5"), pbl::UnknownTheoremError);
}

TEST_CASE("algebra descriptors resolve to chains and files") {
  CHECK(pbl::resolve_algebra("godel:3") == pbl::godel_chain(3));
  CHECK(pbl::resolve_algebra("lukasiewicz:4") == pbl::lukasiewicz_chain(4));
  CHECK(pbl::resolve_algebra(std::string(PBL_TEST_DATA_DIR) + "/godel3.alg") ==
        pbl::godel_chain(3));

  CHECK_THROWS_AS(pbl::resolve_algebra("godel:"), pbl::ParseError);
  CHECK_THROWS_AS(pbl::resolve_algebra("godel:x"), pbl::ParseError);
  CHECK_THROWS_AS(pbl::resolve_algebra("godel:1001"), pbl::ParseError);
  CHECK_THROWS_AS(pbl::resolve_algebra("no_such_file.alg"), pbl::ParseError);
}

TEST_CASE("a verified sweep reports the full candidate count") {
  const auto rs = pbl::verify_theorem(one_algebra("godel:3"), TheoremId::T3_5);
  REQUIRE(rs.size() == 1);
  const VerificationResult& r = rs.front();
  CHECK(r.theorem == TheoremId::T3_5);
  CHECK(r.algebra_descriptor == "godel:3");
  CHECK(r.grid_descriptor == "0,0.3,0.5,0.7,1");
  CHECK(r.candidates_checked == 1331);
  CHECK(r.status == VerificationStatus::verified);
  CHECK_FALSE(r.witness.has_value());

  CHECK(pbl::render_result_line(r) ==
        "T3.5 | godel:3 | grid=0,0.3,0.5,0.7,1 | candidates=1331 | verified");
}

TEST_CASE("the degenerate family drives the scalar correspondence") {
  const auto rs = pbl::verify_theorem(one_algebra("godel:3"), TheoremId::T2_4);
  REQUIRE(rs.size() == 1);
  CHECK(rs.front().candidates_checked == 125);
  CHECK(rs.front().status == VerificationStatus::verified);
}

TEST_CASE("equivalences hold across both default chains") {
  SweepConfig cfg = SweepConfig::defaults();
  cfg.algebras = {"godel:3", "lukasiewicz:3"};
  for (TheoremId id : {TheoremId::P3_6, TheoremId::L4_9, TheoremId::T4_10, TheoremId::P4_2}) {
    const auto rs = pbl::verify_theorem(cfg, id);
    REQUIRE(rs.size() == 2);
    for (const auto& r : rs) {
      INFO(pbl::to_string(id) << " on " << r.algebra_descriptor);
      CHECK(r.status == VerificationStatus::verified);
      CHECK(r.candidates_checked == 1331);
    }
  }
}

TEST_CASE("the interior threshold band has a genuine counterexample") {
  const auto rs = pbl::verify_theorem(one_algebra("lukasiewicz:3"), TheoremId::T3_10);
  REQUIRE(rs.size() == 1);
  const VerificationResult& r = rs.front();
  CHECK(r.status == VerificationStatus::counterexample);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->candidate_index == 22);
  REQUIRE(r.witness->values.size() == 3);
  CHECK(pbl::to_string(r.witness->values[0]) == "[0,0]");
  CHECK(pbl::to_string(r.witness->values[1]) == "[0,0.5]");
  CHECK(pbl::to_string(r.witness->values[2]) == "[0,0]");
  CHECK(r.witness->detail ==
        "(F11,F12) at ([0.3,0.3],[0.7,0.7]) fails (fails F11 at (a,a)) but every level set in "
        "the window is a filter");

  CHECK(pbl::render_result_line(r) ==
        "T3.10 | lukasiewicz:3 | grid=0,0.3,0.5,0.7,1 | candidates=1331 | counterexample\n"
        "  witness #22 F={0:[0,0], a:[0,0.5], 1:[0,0]}\n"
        "  (F11,F12) at ([0.3,0.3],[0.7,0.7]) fails (fails F11 at (a,a)) but every level set in "
        "the window is a filter");

  // dropping the interior pair removes the counterexample
  SweepConfig cfg = one_algebra("lukasiewicz:3");
  cfg.threshold_pairs = {{IntervalNumber::zero(), IntervalNumber::half()},
                         {IntervalNumber::zero(), IntervalNumber::one()},
                         {IntervalNumber::half(), IntervalNumber::one()}};
  const auto verified = pbl::verify_theorem(cfg, TheoremId::T3_10);
  CHECK(verified.front().status == VerificationStatus::verified);
}

TEST_CASE("the implicative interior band mirrors the filter one") {
  const auto rs = pbl::verify_theorem(one_algebra("godel:3"), TheoremId::T4_6);
  REQUIRE(rs.size() == 1);
  const VerificationResult& r = rs.front();
  CHECK(r.status == VerificationStatus::counterexample);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->candidate_index == 2);
  CHECK(r.witness->detail ==
        "(F11,F12,F15) at ([0.3,0.3],[0.7,0.7]) fails (fails F15a at (a,0)) but every level set "
        "in the window is an implicative filter");
}

TEST_CASE("coinciding arrow tables skip the separation search") {
  const auto rs = pbl::search_problem_4(one_algebra("godel:3"));
  REQUIRE(rs.size() == 1);
  const VerificationResult& r = rs.front();
  CHECK(r.status == VerificationStatus::skipped);
  CHECK(r.skip_reason == "arrow and sarrow tables coincide, so no candidate can separate them");
  CHECK(r.candidates_checked == 0);
  CHECK(pbl::render_result_line(r) ==
        "PROBLEM4 | godel:3 | grid=0,0.3,0.5,0.7,1 | candidates=0 | skipped (arrow and sarrow "
        "tables coincide, so no candidate can separate them)");
}

TEST_CASE("config validation rejects unusable sweeps") {
  SweepConfig cfg = one_algebra("godel:3");
  cfg.algebras.clear();
  CHECK_THROWS_AS(pbl::verify_theorem(cfg, TheoremId::T3_5), pbl::Error);

  cfg = one_algebra("godel:3");
  cfg.endpoint_grid = {Rational(0, 1), Rational(1, 1)};
  CHECK_THROWS_AS(pbl::verify_theorem(cfg, TheoremId::T3_5), pbl::GridMissingHalfError);

  cfg = one_algebra("godel:3");
  cfg.threshold_pairs = {{IntervalNumber::half(), IntervalNumber::half()}};
  CHECK_THROWS_AS(pbl::verify_theorem(cfg, TheoremId::T3_10), pbl::BadThresholdsError);
}

TEST_CASE("an invalid algebra file is rejected before sweeping") {
  const FinitePseudoBL broken =
      pbl::godel_chain(3).with_entry(FinitePseudoBL::TableId::prod, 1, 1, 2);
  const std::string path = "broken_test_algebra.alg";
  {
    std::ofstream out(path);
    out << pbl::serialize_algebra(broken);
  }
  CHECK_THROWS_AS(pbl::verify_theorem(one_algebra(path), TheoremId::T3_5),
                  pbl::InvalidAlgebraError);
  std::remove(path.c_str());
}

TEST_CASE("reports are identical whatever the worker count") {
  SweepConfig cfg = SweepConfig::defaults();
  cfg.algebras = {"godel:3", "lukasiewicz:3"};

  for (TheoremId id : {TheoremId::T3_5, TheoremId::T3_10}) {
    cfg.parallelism = 1;
    const auto serial = pbl::verify_theorem(cfg, id);
    cfg.parallelism = 4;
    const auto parallel = pbl::verify_theorem(cfg, id);
    CHECK(pbl::render_report_json(serial) == pbl::render_report_json(parallel));
  }

  // more workers than candidates still works
  cfg.algebras = {"godel:2"};
  cfg.parallelism = 64;
  const auto wide = pbl::verify_theorem(cfg, TheoremId::T3_5);
  CHECK(wide.front().candidates_checked == 121);
  CHECK(wide.front().status == VerificationStatus::verified);
}

TEST_CASE("JSON rendering is stable and omits timing by default") {
  const auto rs = pbl::verify_theorem(one_algebra("godel:2"), TheoremId::T3_5);
  const std::string body = pbl::render_result_json(rs.front());
  CHECK(body ==
        "{\n"
        "  \"algebra\": \"godel:2\",\n"
        "  \"candidates\": 121,\n"
        "  \"grid\": \"0,0.3,0.5,0.7,1\",\n"
        "  \"status\": \"verified\",\n"
        "  \"theorem\": \"T3.5\"\n"
        "}");
  CHECK(pbl::render_result_json(rs.front(), true).find("\"elapsed_ms\": ") != std::string::npos);

  const std::string report = pbl::render_report_json(rs);
  CHECK(report == "[\n" + pbl::render_result_json(rs.front(), false, 2) + "\n]\n");
  CHECK(report.find("elapsed_ms") == std::string::npos);

  const auto skipped = pbl::search_problem_4(one_algebra("godel:2"));
  const std::string skip_json = pbl::render_result_json(skipped.front());
  CHECK(skip_json.find("\"skip_reason\": \"arrow and sarrow tables coincide") !=
        std::string::npos);
  CHECK(skip_json.find("\"status\": \"skipped\"") != std::string::npos);
}
