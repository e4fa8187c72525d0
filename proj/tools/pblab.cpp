// Command-line front end: validate and inspect algebra tables, evaluate the
// fuzzy-filter predicates on explicit sets, and run the theorem sweeps.
//
// Exit codes: 0 predicate holds / sweep verified (or honestly skipped),
// 1 predicate fails / counterexample found, 2 usage or input error.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pbl/pbl.hpp"

namespace {

pbl::FinitePseudoBL load_algebra(const std::string& descriptor) {
  if (descriptor == "-") return pbl::parse_algebra(std::cin);
  return pbl::resolve_algebra(descriptor);
}

pbl::IVFuzzySet load_fuzzy_set(const std::string& path, int carrier) {
  if (path == "-") return pbl::parse_fuzzy_set(std::cin, carrier);
  std::ifstream in(path);
  if (!in) throw pbl::ParseError("cannot open fuzzy-set file '" + path + "'");
  return pbl::parse_fuzzy_set(in, carrier);
}

std::string witness_names(const pbl::FinitePseudoBL& a, const std::vector<pbl::Element>& es) {
  std::string out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) out += ",";
    out += a.name(es[i]);
  }
  return out;
}

int report_validation(const pbl::FinitePseudoBL& a, const pbl::ValidationReport& rep, bool json) {
  if (json) {
    std::string out = "{\n  \"failures\": [";
    for (std::size_t i = 0; i < rep.failures.size(); ++i) {
      if (i) out += ", ";
      out += "{\"law\": \"" + rep.failures[i].law + "\", \"witness\": \"" +
             witness_names(a, rep.failures[i].witness) + "\"}";
    }
    out += "],\n  \"size\": " + std::to_string(a.size()) + ",\n  \"valid\": ";
    out += rep.passed ? "true" : "false";
    out += "\n}";
    std::cout << out << '\n';
  } else if (rep.passed) {
    std::cout << "valid pseudo BL-algebra, " << a.size() << " elements\n";
  } else {
    std::cout << "invalid: " << rep.failures.size() << " law(s) fail\n";
    for (const auto& f : rep.failures)
      std::cout << "  " << f.law << " at (" << witness_names(a, f.witness) << ")\n";
  }
  return rep.passed ? 0 : 1;
}

struct CheckArgs {
  std::string algebra;
  std::string fuzzy;
  std::string predicate;
  std::string alpha = "[0,0]";
  std::string beta = "[0.5,0.5]";
  std::string t = "[0.5,0.5]";
  std::string op = "a";
  bool strict_both = false;
};

int run_check(const CheckArgs& args) {
  const pbl::FinitePseudoBL a = load_algebra(args.algebra);
  const pbl::ValidationReport rep = pbl::validate(a);
  if (!rep.passed)
    throw pbl::InvalidAlgebraError("algebra fails law " + rep.failures.front().law);
  const pbl::IVFuzzySet f = load_fuzzy_set(args.fuzzy, a.size());
  const pbl::IntervalNumber alpha = pbl::parse_interval(args.alpha);
  const pbl::IntervalNumber beta = pbl::parse_interval(args.beta);
  const pbl::IntervalNumber t = pbl::parse_interval(args.t);
  const pbl::ImplicationOperator op = pbl::implication_operator_from_string(args.op);
  const pbl::ExceedRule rule =
      args.strict_both ? pbl::ExceedRule::both_strict : pbl::ExceedRule::order_strict;

  pbl::FilterVerdict v;
  if (args.predicate == "F1F2") {
    v = pbl::is_iv_fuzzy_filter(a, f);
  } else if (args.predicate == "F3F4") {
    const auto grid = pbl::pointwise_threshold_grid(f);
    v = pbl::is_iv_evq_fuzzy_filter_pointwise(a, f, grid, rule);
  } else if (args.predicate == "F5F6") {
    v = pbl::is_iv_evq_fuzzy_filter(a, f);
  } else if (args.predicate == "P36") {
    v = pbl::satisfies_prop_3_6(a, f);
  } else if (args.predicate == "F9F10") {
    v = pbl::satisfies_F9_F10(a, f);
  } else if (args.predicate == "F11F12") {
    v = pbl::is_threshold_fuzzy_filter(a, f, alpha, beta);
  } else if (args.predicate == "F13") {
    v = pbl::is_iv_evq_implicative_filter(a, f);
  } else if (args.predicate == "F14") {
    v = pbl::satisfies_F14(a, f);
  } else if (args.predicate == "F15") {
    v = pbl::is_threshold_implicative_filter(a, f, alpha, beta);
  } else if (args.predicate == "F16") {
    v = pbl::is_iv_evq_mv_filter(a, f);
  } else if (args.predicate == "F17") {
    v = pbl::is_iv_evq_g_filter(a, f);
  } else if (args.predicate == "F18-21") {
    v = pbl::is_fuzzifying_implicative_filter(a, f);
  } else if (args.predicate == "F26-29") {
    v = pbl::is_t_implication_based_implicative_filter(a, f, t, op);
  } else {
    throw CLI::ValidationError("--predicate", "unknown predicate tag '" + args.predicate + "'");
  }
  std::cout << args.predicate << " " << pbl::describe(v, a) << '\n';
  return v.holds ? 0 : 1;
}

struct VerifyArgs {
  std::string theorem = "all";
  std::vector<std::string> algebras;
  std::string grid;
  std::string thresholds = "general";
  bool strict_both = false;
  bool a2_arrow_variant = false;
  bool a2_literature = false;
  int jobs = 1;
  bool json = false;
  bool timing = false;
};

pbl::SweepConfig build_config(const VerifyArgs& args) {
  pbl::SweepConfig cfg = pbl::SweepConfig::defaults();
  if (!args.algebras.empty()) cfg.algebras = args.algebras;
  if (!args.grid.empty()) {
    cfg.endpoint_grid.clear();
    std::stringstream ss(args.grid);
    std::string item;
    while (std::getline(ss, item, ',')) cfg.endpoint_grid.push_back(pbl::Rational::parse(item));
  }
  if (args.thresholds == "degenerate")
    cfg.thresholds_mode = pbl::ThresholdMode::degenerate;
  else if (args.thresholds != "general")
    throw CLI::ValidationError("--thresholds", "expected 'general' or 'degenerate'");
  if (args.strict_both) cfg.exceed_rule = pbl::ExceedRule::both_strict;
  if (args.a2_arrow_variant) cfg.divisibility = pbl::DivisibilityForm::arrow_variant;
  cfg.parallelism = args.jobs;
  return cfg;
}

int report_results(const std::vector<pbl::VerificationResult>& results, const VerifyArgs& args) {
  if (args.json) {
    std::cout << pbl::render_report_json(results, args.timing);
  } else {
    for (const auto& r : results) std::cout << pbl::render_result_line(r, args.timing) << '\n';
  }
  for (const auto& r : results)
    if (r.status == pbl::VerificationStatus::counterexample) return 1;
  return 0;
}

int run_verify(const VerifyArgs& args) {
  const pbl::SweepConfig cfg = build_config(args);
  std::vector<pbl::TheoremId> ids;
  if (args.theorem == "all")
    ids = pbl::all_theorems();
  else
    ids.push_back(pbl::theorem_from_string(args.theorem));
  std::vector<pbl::VerificationResult> results;
  for (pbl::TheoremId id : ids)
    for (auto& r : pbl::verify_theorem(cfg, id)) results.push_back(std::move(r));
  return report_results(results, args);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model laboratory for interval-valued fuzzy filters on pseudo BL-algebras"};
  app.require_subcommand(1);

  std::string algebra_path;
  bool a2_arrow_variant = false;
  bool json_out = false;

  CLI::App* validate = app.add_subcommand("validate", "check the axioms of an algebra file");
  validate->add_option("algebra", algebra_path, "algebra file, chain descriptor, or '-' for stdin")
      ->required();
  validate->add_flag("--a2-arrow-variant", a2_arrow_variant,
                     "check divisibility with the arrow in place of the first product");
  validate->add_flag("--json", json_out, "machine-readable report");

  CLI::App* properties =
      app.add_subcommand("properties", "check the derived arithmetic laws of a valid algebra");
  properties->add_option("algebra", algebra_path, "algebra file, chain descriptor, or '-'")
      ->required();
  properties->add_flag("--json", json_out, "machine-readable report");

  CLI::App* filters =
      app.add_subcommand("filters", "list crisp filters and tag implicative/MV/G ones");
  filters->add_option("algebra", algebra_path, "algebra file, chain descriptor, or '-'")
      ->required();

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "evaluate one filter predicate on a fuzzy set");
  check->add_option("algebra", check_args.algebra, "algebra file, chain descriptor, or '-'")
      ->required();
  check->add_option("fuzzyset", check_args.fuzzy, "fuzzy-set file or '-'")->required();
  check
      ->add_option("--predicate", check_args.predicate,
                   "one of F1F2 F3F4 F5F6 P36 F9F10 F11F12 F13 F14 F15 F16 F17 F18-21 F26-29")
      ->required();
  check->add_option("--alpha", check_args.alpha, "lower threshold, e.g. [0,0]");
  check->add_option("--beta", check_args.beta, "upper threshold, e.g. [0.5,0.5]");
  check->add_option("--t", check_args.t, "tautology threshold, e.g. [0.5,0.5]");
  check->add_option("--op", check_args.op, "implication operator: m a g cg gr b");
  check->add_flag("--strict-both", check_args.strict_both,
                  "read 'sum exceeds [1,1]' as strict in both components");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "sweep a theorem over enumerated fuzzy sets");
  verify->add_option("theorem", verify_args.theorem,
                     "theorem id (e.g. T3.5) or 'all'");
  verify->add_option("--algebra", verify_args.algebras,
                     "algebra to sweep (repeatable); default: both chains, sizes 2-4");
  verify->add_option("--grid", verify_args.grid, "endpoint grid as comma-separated rationals");
  verify->add_option("--thresholds", verify_args.thresholds, "general | degenerate");
  verify->add_flag("--strict-both", verify_args.strict_both,
                   "read 'sum exceeds [1,1]' as strict in both components");
  verify->add_flag("--a2-arrow-variant", verify_args.a2_arrow_variant,
                   "validate divisibility in the arrow form");
  verify->add_flag("--a2-literature", verify_args.a2_literature,
                   "validate divisibility in the product form (the default)");
  verify->add_option("--jobs", verify_args.jobs, "worker threads")->check(CLI::Range(1, 64));
  verify->add_flag("--json", verify_args.json, "JSON report");
  verify->add_flag("--timing", verify_args.timing, "include elapsed milliseconds");

  VerifyArgs search_args;
  CLI::App* search =
      app.add_subcommand("search-problem4", "search for a non-implicative MV+G fuzzy filter");
  search->add_option("--algebra", search_args.algebras, "algebra to search (repeatable)");
  search->add_option("--grid", search_args.grid, "endpoint grid as comma-separated rationals");
  search->add_option("--jobs", search_args.jobs, "worker threads")->check(CLI::Range(1, 64));
  search->add_flag("--json", search_args.json, "JSON report");
  search->add_flag("--timing", search_args.timing, "include elapsed milliseconds");

  std::string family;
  int chain_size = 0;
  std::string out_path;
  CLI::App* generate = app.add_subcommand("generate", "emit a chain algebra in file format");
  generate->add_option("family", family, "godel | lukasiewicz")->required();
  generate->add_option("n", chain_size, "carrier size")->required()->check(CLI::Range(2, 64));
  generate->add_option("-o,--output", out_path, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    pbl::ValidationOptions opts;
    if (a2_arrow_variant) opts.divisibility = pbl::DivisibilityForm::arrow_variant;

    if (*validate) {
      const pbl::FinitePseudoBL a = load_algebra(algebra_path);
      return report_validation(a, pbl::validate(a, opts), json_out);
    }
    if (*properties) {
      const pbl::FinitePseudoBL a = load_algebra(algebra_path);
      const pbl::ValidationReport rep = pbl::check_derived_properties(a);
      if (json_out) return report_validation(a, rep, true);
      if (rep.passed) {
        std::cout << "derived properties (1)-(10): all hold\n";
        return 0;
      }
      std::cout << "derived properties: " << rep.failures.size() << " fail\n";
      for (const auto& fl : rep.failures)
        std::cout << "  " << fl.law << " at (" << witness_names(a, fl.witness) << ")\n";
      return 1;
    }
    if (*filters) {
      const pbl::FinitePseudoBL a = load_algebra(algebra_path);
      const pbl::ValidationReport rep = pbl::validate(a);
      if (!rep.passed)
        throw pbl::InvalidAlgebraError("algebra fails law " + rep.failures.front().law);
      for (pbl::CrispSubset s : pbl::enumerate_filters(a)) {
        std::cout << pbl::subset_to_string(a, s) << " filter";
        if (pbl::is_implicative_filter(a, s)) std::cout << " implicative";
        if (pbl::is_mv_filter(a, s)) std::cout << " mv";
        if (pbl::is_g_filter(a, s)) std::cout << " g";
        std::cout << '\n';
      }
      return 0;
    }
    if (*check) return run_check(check_args);
    if (*verify) return run_verify(verify_args);
    if (*search) {
      const pbl::SweepConfig cfg = build_config(search_args);
      return report_results(pbl::search_problem_4(cfg), search_args);
    }
    if (*generate) {
      const pbl::FinitePseudoBL a =
          family == "godel"         ? pbl::godel_chain(chain_size)
          : family == "lukasiewicz" ? pbl::lukasiewicz_chain(chain_size)
                                    : throw pbl::ParseError("unknown family '" + family + "'");
      const std::string text = pbl::serialize_algebra(a);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw pbl::ParseError("cannot write '" + out_path + "'");
        out << text;
      }
      return 0;
    }
  } catch (const pbl::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
