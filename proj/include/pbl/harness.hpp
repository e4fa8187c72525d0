#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pbl/algebra.hpp"
#include "pbl/errors.hpp"
#include "pbl/filters.hpp"
#include "pbl/fuzzy.hpp"
#include "pbl/implication.hpp"
#include "pbl/interval.hpp"

namespace pbl {

enum class TheoremId {
  T2_4,
  T3_2,
  T3_5,
  P3_6,
  T3_7,
  T3_8,
  T3_10,
  T4_3,
  T4_4,
  T4_6,
  P4_2,
  L4_9,
  T4_10,
  C5_3,
  T5_4i,
  T5_4ii,
  T5_4iii,
  PROBLEM4,
};

inline const std::vector<std::pair<std::string, TheoremId>>& theorem_names() {
  static const std::vector<std::pair<std::string, TheoremId>> names = {
      {"T2.4", TheoremId::T2_4},   {"T3.2", TheoremId::T3_2},
      {"T3.5", TheoremId::T3_5},   {"P3.6", TheoremId::P3_6},
      {"T3.7", TheoremId::T3_7},   {"T3.8", TheoremId::T3_8},
      {"T3.10", TheoremId::T3_10}, {"T4.3", TheoremId::T4_3},
      {"T4.4", TheoremId::T4_4},   {"T4.6", TheoremId::T4_6},
      {"P4.2", TheoremId::P4_2},   {"L4.9", TheoremId::L4_9},
      {"T4.10", TheoremId::T4_10}, {"C5.3", TheoremId::C5_3},
      {"T5.4i", TheoremId::T5_4i}, {"T5.4ii", TheoremId::T5_4ii},
      {"T5.4iii", TheoremId::T5_4iii}, {"PROBLEM4", TheoremId::PROBLEM4},
  };
  return names;
}

inline std::string to_string(TheoremId id) {
  for (const auto& [name, t] : theorem_names())
    if (t == id) return name;
  return "?";
}

inline TheoremId theorem_from_string(const std::string& name) {
  for (const auto& [n, t] : theorem_names())
    if (n == name) return t;
  throw UnknownTheoremError("unknown theorem id '" + name + "'");
}

inline std::vector<TheoremId> all_theorems() {
  std::vector<TheoremId> out;
  for (const auto& [n, t] : theorem_names()) out.push_back(t);
  return out;
}

/**
 * One exhaustive sweep: which algebras, which endpoint grid for candidate
 * sets, and how the threshold quantifiers are read.
 */
struct SweepConfig {
  std::vector<std::string> algebras;      // "godel:N", "lukasiewicz:N", or a file path
  std::vector<Rational> endpoint_grid;    // must contain 0, 1/2, 1
  ThresholdMode thresholds_mode = ThresholdMode::general;
  ExceedRule exceed_rule = ExceedRule::order_strict;
  DivisibilityForm divisibility = DivisibilityForm::literature;
  int parallelism = 1;
  std::vector<std::pair<IntervalNumber, IntervalNumber>> threshold_pairs;  // for T3.10 / T4.6
  std::vector<IntervalNumber> tautology_thresholds;                        // for C5.3

  static SweepConfig defaults() {
    SweepConfig cfg;
    cfg.algebras = {"godel:2", "godel:3", "godel:4", "lukasiewicz:2", "lukasiewicz:3",
                    "lukasiewicz:4"};
    cfg.endpoint_grid = {Rational(0, 1), Rational(3, 10), Rational(1, 2), Rational(7, 10),
                         Rational(1, 1)};
    cfg.threshold_pairs = default_threshold_pairs();
    cfg.tautology_thresholds = {IntervalNumber::from_grid(3, 4, 10), IntervalNumber::half(),
                                IntervalNumber::one()};
    return cfg;
  }

  static std::vector<std::pair<IntervalNumber, IntervalNumber>> default_threshold_pairs() {
    return {
        {IntervalNumber::zero(), IntervalNumber::half()},
        {IntervalNumber::zero(), IntervalNumber::one()},
        {IntervalNumber::half(), IntervalNumber::one()},
        {IntervalNumber::from_grid(3, 3, 10), IntervalNumber::from_grid(7, 7, 10)},
    };
  }
};

/// Builds the named algebra: "godel:N", "lukasiewicz:N", or the path of an
/// algebra file.
inline FinitePseudoBL resolve_algebra(const std::string& descriptor) {
  const auto parse_chain = [&](const std::string& prefix) -> std::optional<int> {
    if (descriptor.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string num = descriptor.substr(prefix.size());
    if (num.empty()) throw ParseError("missing chain size in '" + descriptor + "'");
    int n = 0;
    for (char c : num) {
      if (c < '0' || c > '9') throw ParseError("bad chain size in '" + descriptor + "'");
      n = n * 10 + (c - '0');
      if (n > 1000) throw ParseError("chain size out of range in '" + descriptor + "'");
    }
    return n;
  };
  if (const auto n = parse_chain("godel:")) return godel_chain(*n);
  if (const auto n = parse_chain("lukasiewicz:")) return lukasiewicz_chain(*n);
  std::ifstream in(descriptor);
  if (!in) throw ParseError("cannot open algebra file '" + descriptor + "'");
  return parse_algebra(in);
}

enum class VerificationStatus { verified, counterexample, skipped };

inline std::string to_string(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::verified: return "verified";
    case VerificationStatus::counterexample: return "counterexample";
    case VerificationStatus::skipped: return "skipped";
  }
  return "?";
}

struct VerificationWitness {
  std::uint64_t candidate_index = 0;
  std::vector<IntervalNumber> values;  // the candidate set, element order
  std::string detail;
};

struct VerificationResult {
  TheoremId theorem{};
  std::string algebra_descriptor;
  std::string grid_descriptor;
  std::uint64_t candidates_checked = 0;
  VerificationStatus status = VerificationStatus::verified;
  std::optional<VerificationWitness> witness;
  std::string skip_reason;
  std::chrono::milliseconds elapsed{0};
};

namespace detail {

/// Scans every candidate (never stopping early, so the count is always the
/// closed form k^n) and returns the failure with the smallest index, if any.
/// With jobs > 1 the index range splits into contiguous chunks, one thread
/// each; the merge keeps the globally smallest index, so the outcome does not
/// depend on the worker count.
struct SweepHit {
  std::uint64_t index;
  std::string detail;
};

template <typename CheckFn>
std::pair<std::uint64_t, std::optional<SweepHit>> sweep_candidates(
    const IVFuzzySetEnumerator& en, int jobs, const CheckFn& check) {
  const std::uint64_t count = en.count();
  if (jobs < 1) jobs = 1;
  if (static_cast<std::uint64_t>(jobs) > count) jobs = static_cast<int>(count);

  std::vector<std::optional<SweepHit>> hits(static_cast<std::size_t>(jobs));
  const auto worker = [&](int w) {
    const std::uint64_t chunk = (count + jobs - 1) / jobs;
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = begin + chunk < count ? begin + chunk : count;
    std::optional<SweepHit>& local = hits[static_cast<std::size_t>(w)];
    for (std::uint64_t i = begin; i < end; ++i) {
      const IVFuzzySet f = en.at(i);
      if (local) continue;  // chunk already has its first failure; keep visiting
      if (auto detail = check(f)) local = SweepHit{i, std::move(*detail)};
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }

  std::optional<SweepHit> best;
  for (auto& h : hits)
    if (h && (!best || h->index < best->index)) best = h;
  return {count, best};
}

inline std::string join_grid(const std::vector<Rational>& grid) {
  std::string out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i) out += ",";
    out += grid[i].to_decimal();
  }
  return out;
}

inline std::string set_to_string(const FinitePseudoBL& a, const IVFuzzySet& f) {
  std::string out = "{";
  for (Element x = 0; x < a.size(); ++x) {
    if (x) out += ", ";
    out += a.name(x) + ":" + to_string(f(x));
  }
  return out + "}";
}

struct LevelBreach {
  IntervalNumber t;
  CrispSubset set;
};

template <typename Pred>
std::optional<LevelBreach> first_level_breach(const IVFuzzySet& f, const ThresholdWindow& w,
                                              ThresholdMode mode, const Pred& good) {
  for (const IntervalNumber& t : critical_thresholds(f, w, mode)) {
    const CrispSubset s = level_set(f, t);
    if (s == 0) continue;
    if (!good(s)) return LevelBreach{t, s};
  }
  return std::nullopt;
}

using Checker = std::function<std::optional<std::string>(const IVFuzzySet&)>;

/// The per-candidate check for one theorem on one algebra. Returns the
/// failure description, or nullopt when the candidate is consistent with the
/// theorem.
inline Checker make_checker(TheoremId id, const FinitePseudoBL& a, const SweepConfig& cfg) {
  const auto window_full = full_window();
  const ThresholdWindow window_low{IntervalNumber::zero(), IntervalNumber::half()};
  const ThresholdWindow window_high{IntervalNumber::half(), IntervalNumber::one()};
  const ThresholdMode mode = cfg.thresholds_mode;

  const auto filter_pred = [&a](CrispSubset s) { return is_filter(a, s); };
  const auto impl_pred = [&a](CrispSubset s) { return is_implicative_filter(a, s); };

  const auto level_equiv = [&a, mode](const IVFuzzySet& f, bool lhs, const ThresholdWindow& w,
                                      const auto& pred, const std::string& lhs_name,
                                      const std::string& pred_name,
                                      const std::string& lhs_detail) -> std::optional<std::string> {
    const auto breach = first_level_breach(f, w, mode, pred);
    if (lhs && breach)
      return lhs_name + " holds but level set at " + to_string(breach->t) + " = " +
             subset_to_string(a, breach->set) + " is not " + pred_name;
    if (!lhs && !breach)
      return lhs_name + " fails (" + lhs_detail + ") but every level set in the window is " +
             pred_name;
    return std::nullopt;
  };

  switch (id) {
    case TheoremId::T2_4:
      return [&a, mode, level_equiv](const IVFuzzySet& f) -> std::optional<std::string> {
        const FilterVerdict v = is_fuzzy_filter_scalar(a, f);
        return level_equiv(f, v.holds, full_window(), [&a](CrispSubset s) { return is_filter(a, s); },
                           "scalar filter condition", "a filter", describe(v, a));
      };
    case TheoremId::T3_2:
      return [&a, mode, filter_pred, level_equiv, window_full](const IVFuzzySet& f) {
        const FilterVerdict v = is_iv_fuzzy_filter(a, f);
        return level_equiv(f, v.holds, window_full, filter_pred, "(F1,F2)", "a filter",
                           describe(v, a));
      };
    case TheoremId::T3_5:
      return [&a, &cfg](const IVFuzzySet& f) -> std::optional<std::string> {
        const std::vector<IntervalNumber> grid = pointwise_threshold_grid(f);
        const FilterVerdict lhs = is_iv_evq_fuzzy_filter_pointwise(a, f, grid, cfg.exceed_rule);
        const FilterVerdict rhs = is_iv_evq_fuzzy_filter(a, f);
        if (lhs.holds == rhs.holds) return std::nullopt;
        return "pointwise definition " + describe(lhs, a) + "; (F5,F6) " + describe(rhs, a);
      };
    case TheoremId::P3_6:
      return [&a](const IVFuzzySet& f) -> std::optional<std::string> {
        const FilterVerdict lhs = satisfies_prop_3_6(a, f);
        const FilterVerdict rhs = is_iv_evq_fuzzy_filter(a, f);
        if (lhs.holds == rhs.holds) return std::nullopt;
        return "(F7)+(F8|F8') " + describe(lhs, a) + "; (F5,F6) " + describe(rhs, a);
      };
    case TheoremId::T3_7:
      return [&a, filter_pred, level_equiv, window_low](const IVFuzzySet& f) {
        const FilterVerdict v = is_iv_evq_fuzzy_filter(a, f);
        return level_equiv(f, v.holds, window_low, filter_pred, "(F5,F6)", "a filter",
                           describe(v, a));
      };
    case TheoremId::T3_8:
      return [&a, filter_pred, level_equiv, window_high](const IVFuzzySet& f) {
        const FilterVerdict v = satisfies_F9_F10(a, f);
        return level_equiv(f, v.holds, window_high, filter_pred, "(F9,F10)", "a filter",
                           describe(v, a));
      };
    case TheoremId::T3_10:
      return [&a, &cfg, filter_pred, level_equiv](const IVFuzzySet& f) -> std::optional<std::string> {
        for (const auto& [alpha, beta] : cfg.threshold_pairs) {
          const FilterVerdict v = is_threshold_fuzzy_filter(a, f, alpha, beta);
          auto bad = level_equiv(f, v.holds, ThresholdWindow{alpha, beta}, filter_pred,
                                 "(F11,F12) at (" + to_string(alpha) + "," + to_string(beta) + ")",
                                 "a filter", describe(v, a));
          if (bad) return bad;
        }
        return std::nullopt;
      };
    case TheoremId::T4_3:
      return [&a, impl_pred, level_equiv, window_low](const IVFuzzySet& f) {
        const FilterVerdict v = is_iv_evq_implicative_filter(a, f);
        return level_equiv(f, v.holds, window_low, impl_pred, "(F5,F6)+(F13)",
                           "an implicative filter", describe(v, a));
      };
    case TheoremId::T4_4:
      return [&a, impl_pred, level_equiv, window_high](const IVFuzzySet& f)
                 -> std::optional<std::string> {
        FilterVerdict v = satisfies_F9_F10(a, f);
        if (v.holds) v = satisfies_F14(a, f);
        return level_equiv(f, v.holds, window_high, impl_pred, "(F9,F10)+(F14)",
                           "an implicative filter", describe(v, a));
      };
    case TheoremId::T4_6:
      return [&a, &cfg, impl_pred, level_equiv](const IVFuzzySet& f) -> std::optional<std::string> {
        for (const auto& [alpha, beta] : cfg.threshold_pairs) {
          const FilterVerdict v = is_threshold_implicative_filter(a, f, alpha, beta);
          auto bad = level_equiv(f, v.holds, ThresholdWindow{alpha, beta}, impl_pred,
                                 "(F11,F12,F15) at (" + to_string(alpha) + "," + to_string(beta) +
                                     ")",
                                 "an implicative filter", describe(v, a));
          if (bad) return bad;
        }
        return std::nullopt;
      };
    case TheoremId::P4_2:
      return [&a](const IVFuzzySet& f) -> std::optional<std::string> {
        if (!is_iv_evq_implicative_filter(a, f).holds) return std::nullopt;
        const FilterVerdict v = check_prop_4_2(a, f);
        if (v.holds) return std::nullopt;
        return "implicative filter " + describe(v, a);
      };
    case TheoremId::L4_9:
      return [&a](const IVFuzzySet& f) -> std::optional<std::string> {
        if (!is_iv_evq_implicative_filter(a, f).holds) return std::nullopt;
        const FilterVerdict v = is_iv_evq_g_filter(a, f);
        if (v.holds) return std::nullopt;
        return "implicative filter " + describe(v, a);
      };
    case TheoremId::T4_10:
      return [&a](const IVFuzzySet& f) -> std::optional<std::string> {
        if (!is_iv_evq_fuzzy_filter(a, f).holds || !arrows_agree(a, f)) return std::nullopt;
        const bool impl = is_iv_evq_implicative_filter(a, f).holds;
        const bool mv = is_iv_evq_mv_filter(a, f).holds;
        const bool g = is_iv_evq_g_filter(a, f).holds;
        if (impl == (mv && g)) return std::nullopt;
        return std::string("implicative=") + (impl ? "yes" : "no") + " but MV=" +
               (mv ? "yes" : "no") + " and G=" + (g ? "yes" : "no");
      };
    case TheoremId::C5_3:
      return [&a, &cfg](const IVFuzzySet& f) -> std::optional<std::string> {
        for (const auto& [name, op] : implication_operators())
          for (const IntervalNumber& t : cfg.tautology_thresholds) {
            const bool semantic = is_t_implication_filter_semantic(a, f, t, op).holds;
            const bool direct = is_t_implication_based_implicative_filter(a, f, t, op).holds;
            if (semantic != direct)
              return "operator " + name + " at t=" + to_string(t) + ": semantic route says " +
                     (semantic ? "yes" : "no") + ", direct route says " + (direct ? "yes" : "no");
          }
        return std::nullopt;
      };
    case TheoremId::T5_4i:
    case TheoremId::T5_4ii:
    case TheoremId::T5_4iii: {
      const Theorem54Variant variant = id == TheoremId::T5_4i    ? Theorem54Variant::gaines_rescher
                                       : id == TheoremId::T5_4ii ? Theorem54Variant::godel
                                                                 : Theorem54Variant::contraposition_godel;
      return [&a, variant](const IVFuzzySet& f) -> std::optional<std::string> {
        const EquivalenceVerdict v = check_theorem_5_4(a, f, variant);
        if (v.agree) return std::nullopt;
        return v.detail;
      };
    }
    case TheoremId::PROBLEM4:
      return [&a](const IVFuzzySet& f) -> std::optional<std::string> {
        if (arrows_agree(a, f)) return std::nullopt;
        if (!is_iv_evq_mv_filter(a, f).holds || !is_iv_evq_g_filter(a, f).holds)
          return std::nullopt;
        const FilterVerdict impl = is_iv_evq_implicative_filter(a, f);
        if (impl.holds) return std::nullopt;
        return "MV and G filter with disagreeing arrow values that is not implicative (" +
               describe(impl, a) + ")";
      };
  }
  throw UnknownTheoremError("theorem id not wired to a checker");
}

}  // namespace detail

/**
 * Runs one theorem over every configured algebra, enumerating all candidate
 * sets with grid endpoints. One result per algebra, in configuration order.
 * Identical configs produce identical results whatever the parallelism.
 */
inline std::vector<VerificationResult> verify_theorem(const SweepConfig& cfg, TheoremId id) {
  if (cfg.algebras.empty()) throw Error("sweep config needs at least one algebra");
  IVFuzzySetEnumerator::validate_grid(cfg.endpoint_grid);
  for (const auto& [alpha, beta] : cfg.threshold_pairs) require_threshold_pair(alpha, beta);

  std::vector<VerificationResult> results;
  for (const std::string& descriptor : cfg.algebras) {
    const FinitePseudoBL alg = resolve_algebra(descriptor);
    const ValidationReport rep = validate(alg, {cfg.divisibility});
    if (!rep.passed)
      throw InvalidAlgebraError("algebra '" + descriptor + "' fails validation (first law: " +
                                rep.failures.front().law + ")");

    VerificationResult r;
    r.theorem = id;
    r.algebra_descriptor = descriptor;
    r.grid_descriptor = detail::join_grid(cfg.endpoint_grid);
    const auto start = std::chrono::steady_clock::now();

    if (id == TheoremId::PROBLEM4 && alg.arrow_table() == alg.sarrow_table()) {
      r.status = VerificationStatus::skipped;
      r.skip_reason = "arrow and sarrow tables coincide, so no candidate can separate them";
      results.push_back(std::move(r));
      continue;
    }

    const auto family = id == TheoremId::T2_4 ? IVFuzzySetEnumerator::Family::degenerate
                                              : IVFuzzySetEnumerator::Family::dichotomous;
    const IVFuzzySetEnumerator en(alg.size(), cfg.endpoint_grid, family);
    const detail::Checker check = detail::make_checker(id, alg, cfg);
    auto [checked, hit] = detail::sweep_candidates(en, cfg.parallelism, check);
    r.candidates_checked = checked;
    if (hit) {
      r.status = VerificationStatus::counterexample;
      VerificationWitness w;
      w.candidate_index = hit->index;
      w.values = en.at(hit->index).values();
      w.detail = std::move(hit->detail);
      r.witness = std::move(w);
    } else {
      r.status = VerificationStatus::verified;
    }
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    results.push_back(std::move(r));
  }
  return results;
}

/**
 * Searches for an (in, in-or-q) MV and G filter that is not implicative and
 * whose membership values distinguish the two arrows. On algebras whose
 * arrow tables coincide no candidate qualifies, so those report skipped.
 * A hit reports status counterexample with the witness; exhausting the space
 * reports verified, meaning "none at this grid and carrier".
 */
inline std::vector<VerificationResult> search_problem_4(const SweepConfig& cfg) {
  return verify_theorem(cfg, TheoremId::PROBLEM4);
}

inline std::string render_result_line(const VerificationResult& r, bool include_elapsed = false) {
  std::string out = to_string(r.theorem) + " | " + r.algebra_descriptor + " | grid=" +
                    r.grid_descriptor + " | candidates=" + std::to_string(r.candidates_checked) +
                    " | " + to_string(r.status);
  if (r.status == VerificationStatus::skipped) out += " (" + r.skip_reason + ")";
  if (r.witness) {
    out += "\n  witness #" + std::to_string(r.witness->candidate_index) + " F=";
    const FinitePseudoBL alg = resolve_algebra(r.algebra_descriptor);
    std::vector<IntervalNumber> vals = r.witness->values;
    IVFuzzySet f(vals, IVFuzzySet::Dichotomy::allow_nondichotomous);
    out += detail::set_to_string(alg, f);
    out += "\n  " + r.witness->detail;
  }
  if (include_elapsed) out += " [" + std::to_string(r.elapsed.count()) + " ms]";
  return out;
}

namespace detail {

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace detail

/// One result as a JSON object with a fixed key order. Timing is omitted
/// unless requested, so default reports are byte-stable across runs and
/// worker counts.
inline std::string render_result_json(const VerificationResult& r, bool include_elapsed = false,
                                      int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent) + 2, ' ');
  std::string out = pad + "{\n";
  out += inner + "\"algebra\": \"" + detail::json_escape(r.algebra_descriptor) + "\",\n";
  out += inner + "\"candidates\": " + std::to_string(r.candidates_checked) + ",\n";
  if (include_elapsed)
    out += inner + "\"elapsed_ms\": " + std::to_string(r.elapsed.count()) + ",\n";
  out += inner + "\"grid\": \"" + detail::json_escape(r.grid_descriptor) + "\",\n";
  if (r.status == VerificationStatus::skipped)
    out += inner + "\"skip_reason\": \"" + detail::json_escape(r.skip_reason) + "\",\n";
  out += inner + "\"status\": \"" + to_string(r.status) + "\",\n";
  out += inner + "\"theorem\": \"" + to_string(r.theorem) + "\"";
  if (r.witness) {
    out += ",\n" + inner + "\"witness\": {\n";
    out += inner + "  \"detail\": \"" + detail::json_escape(r.witness->detail) + "\",\n";
    out += inner + "  \"index\": " + std::to_string(r.witness->candidate_index) + ",\n";
    out += inner + "  \"values\": [";
    for (std::size_t i = 0; i < r.witness->values.size(); ++i) {
      if (i) out += ", ";
      out += "\"" + to_string(r.witness->values[i]) + "\"";
    }
    out += "]\n" + inner + "}";
  }
  out += "\n" + pad + "}";
  return out;
}

inline std::string render_report_json(const std::vector<VerificationResult>& rs,
                                      bool include_elapsed = false) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    out += render_result_json(rs[i], include_elapsed, 2);
    if (i + 1 < rs.size()) out += ",";
    out += "\n";
  }
  out += "]\n";
  return out;
}

}  // namespace pbl
