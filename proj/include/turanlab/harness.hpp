#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "turanlab/cliques.hpp"
#include "turanlab/embedding.hpp"
#include "turanlab/exact.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/rng.hpp"
#include "turanlab/serialize.hpp"
#include "turanlab/spectral.hpp"
#include "turanlab/theorems.hpp"

namespace turanlab {

enum class ExperimentMode { Exhaustive, FamilySweep, RandomHunt, Tightness };

inline constexpr std::pair<ExperimentMode, std::string_view> kModeNames[] = {
    {ExperimentMode::Exhaustive, "exhaustive"},
    {ExperimentMode::FamilySweep, "family_sweep"},
    {ExperimentMode::RandomHunt, "random_hunt"},
    {ExperimentMode::Tightness, "tightness"},
};

inline std::string_view mode_name(ExperimentMode m) {
  for (auto [k, name] : kModeNames)
    if (k == m) return name;
  return "?";
}

inline constexpr std::string_view kFamilyNames[] = {"turan", "turan_plus", "turan_minus", "kr_plus", "book"};

/// Largest order the exhaustive mode accepts (2^28 labelled graphs).
inline constexpr std::size_t kExhaustiveMaxOrder = 8;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  while (true) {
    const auto comma = s.find(',');
    const auto item = trim(s.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace detail

/// Non-negative integer; accepts decimal, 0x-hex and integral scientific
/// notation such as 1e8.
inline std::uint64_t parse_count(std::string_view s) {
  s = detail::trim(s);
  if (s.empty()) throw ConfigError("expected an integer, got an empty value");
  std::uint64_t v = 0;
  const char* end = s.data() + s.size();
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    auto [p, ec] = std::from_chars(s.data() + 2, end, v, 16);
    if (ec == std::errc() && p == end) return v;
    throw ConfigError("bad hexadecimal integer '" + std::string(s) + "'");
  }
  if (auto [p, ec] = std::from_chars(s.data(), end, v); ec == std::errc() && p == end) return v;
  double d = 0;
  if (auto [p, ec] = std::from_chars(s.data(), end, d); ec == std::errc() && p == end) {
    if (std::isfinite(d) && d >= 0 && d <= 9007199254740992.0 && d == std::floor(d)) return static_cast<std::uint64_t>(d);
  }
  throw ConfigError("expected a non-negative integer, got '" + std::string(s) + "'");
}

inline double parse_real(std::string_view s) {
  s = detail::trim(s);
  double d = 0;
  const char* end = s.data() + s.size();
  if (auto [p, ec] = std::from_chars(s.data(), end, d); ec == std::errc() && p == end && std::isfinite(d)) return d;
  throw ConfigError("expected a number, got '" + std::string(s) + "'");
}

/// A signed offset such as "-3" or "+1".
inline std::int64_t parse_offset(std::string_view s) {
  s = detail::trim(s);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto v = static_cast<std::int64_t>(parse_count(s));
  return neg ? -v : v;
}

struct ExperimentConfig {
  ExperimentMode mode = ExperimentMode::Exhaustive;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::vector<std::size_t> r{2};
  std::vector<TheoremId> theorems;
  std::optional<std::uint64_t> seed;
  std::uint64_t trials = 1;
  std::uint64_t budget = kDefaultBudget;
  double tol = kDefaultTolerance;
  std::string output;
  std::string csv;
  std::size_t threads = 1;
  /// Exhaustive mode: sample this many uniform labelled graphs per order
  /// instead of enumerating all of them (0 = enumerate).
  std::uint64_t sample_cap = 0;
  /// Random hunt: m = e(T_r(n)) + m_offset, clamped to [0, C(n,2)].
  std::int64_t m_offset = 1;
  /// Tightness: edge density 1 - epsilon and the grid of c for s = floor(c ln n).
  double epsilon = 0.5;
  std::vector<double> c_grid{0.25, 0.5, 0.75, 1.0};
  std::vector<std::string> families{kFamilyNames, kFamilyNames + std::size(kFamilyNames)};
  std::optional<double> c;
  std::optional<double> b;
  bool refine = true;
  std::size_t exact_max_order = 16;

  TheoremParams params(std::size_t rr) const {
    TheoremParams p;
    p.r = rr;
    p.c = c;
    p.b = b;
    p.tol = tol;
    p.budget = budget;
    p.resolve = {refine, kRefineTolerance, exact_max_order};
    return p;
  }

  /// Sets one key. Unknown keys and malformed values throw ConfigError.
  void set(std::string_view key, std::string_view value) {
    key = detail::trim(key);
    value = detail::trim(value);
    if (key == "mode") {
      for (auto [m, name] : kModeNames) {
        if (name == value) {
          mode = m;
          return;
        }
      }
      throw ConfigError("unknown mode '" + std::string(value) + "'");
    } else if (key == "n") {
      const auto dots = value.find("..");
      if (dots == std::string_view::npos) {
        n_min = n_max = parse_count(value);
      } else {
        n_min = parse_count(value.substr(0, dots));
        n_max = parse_count(value.substr(dots + 2));
      }
    } else if (key == "n_min") {
      n_min = parse_count(value);
    } else if (key == "n_max") {
      n_max = parse_count(value);
    } else if (key == "r") {
      r.clear();
      for (const auto& item : detail::split_list(value)) r.push_back(parse_count(item));
    } else if (key == "theorems") {
      theorems.clear();
      for (const auto& item : detail::split_list(value)) {
        auto id = parse_theorem(item);
        if (!id) throw ConfigError("unknown theorem '" + item + "'");
        theorems.push_back(*id);
      }
    } else if (key == "seed") {
      seed = parse_count(value);
    } else if (key == "trials") {
      trials = parse_count(value);
    } else if (key == "budget") {
      budget = parse_count(value);
    } else if (key == "tol") {
      tol = parse_real(value);
    } else if (key == "output") {
      output = std::string(value);
    } else if (key == "csv") {
      csv = std::string(value);
    } else if (key == "threads") {
      threads = parse_count(value);
    } else if (key == "sample_cap") {
      sample_cap = parse_count(value);
    } else if (key == "m_offset") {
      m_offset = parse_offset(value);
    } else if (key == "epsilon") {
      epsilon = parse_real(value);
    } else if (key == "c_grid") {
      c_grid.clear();
      for (const auto& item : detail::split_list(value)) c_grid.push_back(parse_real(item));
    } else if (key == "families") {
      families = detail::split_list(value);
    } else if (key == "c") {
      c = parse_real(value);
    } else if (key == "b") {
      b = parse_real(value);
    } else if (key == "refine") {
      if (value != "true" && value != "false") throw ConfigError("refine must be true or false");
      refine = value == "true";
    } else if (key == "exact_max_order") {
      exact_max_order = parse_count(value);
    } else {
      throw ConfigError("unknown key '" + std::string(key) + "'");
    }
  }

  void validate() const {
    if (n_max < n_min) throw ConfigError("n range is empty");
    if (n_min == 0) throw ConfigError("n must be at least 1");
    if (r.empty()) throw ConfigError("r list is empty");
    for (auto rr : r)
      if (rr < 2) throw ConfigError("every r must be at least 2");
    if (!(tol > 0)) throw ConfigError("tol must be positive");
    if (threads == 0) throw ConfigError("threads must be at least 1");
    const bool randomized = mode == ExperimentMode::RandomHunt || mode == ExperimentMode::Tightness ||
                            (mode == ExperimentMode::Exhaustive && sample_cap > 0);
    if (randomized && !seed) throw ConfigError("randomized modes need an explicit seed");
    if (mode != ExperimentMode::Tightness && theorems.empty()) throw ConfigError("no theorems selected");
    if (mode == ExperimentMode::Exhaustive && n_max > kExhaustiveMaxOrder) {
      throw ConfigError("exhaustive mode supports n <= " + std::to_string(kExhaustiveMaxOrder));
    }
    if (mode == ExperimentMode::Tightness) {
      if (!(epsilon > 0 && epsilon < 1)) throw ConfigError("epsilon must lie in (0, 1)");
      if (n_min < 2) throw ConfigError("tightness needs n >= 2");
    }
    if (mode == ExperimentMode::FamilySweep) {
      for (const auto& f : families) {
        if (std::find(std::begin(kFamilyNames), std::end(kFamilyNames), f) == std::end(kFamilyNames)) {
          throw ConfigError("unknown family '" + f + "'");
        }
      }
    }
  }

  Json to_json() const {
    Json th = Json::array();
    for (auto id : theorems) th.push_back(theorem_name(id));
    Json out = {{"mode", mode_name(mode)},
                {"n_min", n_min},
                {"n_max", n_max},
                {"r", r},
                {"theorems", th},
                {"seed", seed ? Json(*seed) : Json()},
                {"trials", trials},
                {"budget", budget},
                {"tol", tol},
                {"sample_cap", sample_cap},
                {"m_offset", m_offset},
                {"epsilon", epsilon},
                {"c_grid", c_grid},
                {"families", families},
                {"c", c ? Json(*c) : Json()},
                {"b", b ? Json(*b) : Json()},
                {"refine", refine},
                {"exact_max_order", exact_max_order}};
    return out;
  }
};

/// Reads `key = value` lines; '#' starts a comment.
inline ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s(line);
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = detail::trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    try {
      cfg.set(s.substr(0, eq), s.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

inline ExperimentConfig parse_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  return parse_config(in);
}

// ---------------------------------------------------------------------------
// Aggregation

struct Slack {
  Rational value;
  std::uint64_t index = 0;
};

/// Per (theorem, r) counts.
struct TheoremTally {
  std::uint64_t instances = 0;
  std::uint64_t hypothesis[3] = {0, 0, 0};
  std::uint64_t conclusion_given_hypothesis[3] = {0, 0, 0};
  std::uint64_t counterexamples = 0;
  std::uint64_t inconclusive = 0;
  std::uint64_t out_of_regime = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t escalated = 0;
  std::uint64_t resolved_by[4] = {0, 0, 0, 0};
  std::map<std::string, Slack> min_slack;
  std::map<Rational, std::uint64_t> lhs_histogram;

  void merge(const TheoremTally& o) {
    instances += o.instances;
    for (int i = 0; i < 3; ++i) {
      hypothesis[i] += o.hypothesis[i];
      conclusion_given_hypothesis[i] += o.conclusion_given_hypothesis[i];
    }
    counterexamples += o.counterexamples;
    inconclusive += o.inconclusive;
    out_of_regime += o.out_of_regime;
    vacuous += o.vacuous;
    escalated += o.escalated;
    for (int i = 0; i < 4; ++i) resolved_by[i] += o.resolved_by[i];
    for (const auto& [name, s] : o.min_slack) {
      auto it = min_slack.find(name);
      if (it == min_slack.end() || s.value < it->second.value) min_slack[name] = s;
    }
    for (const auto& [k, c] : o.lhs_histogram) lhs_histogram[k] += c;
  }
};

struct EscalationRecord {
  std::uint64_t index = 0;
  TheoremId theorem = TheoremId::FactSTT;
  std::size_t n = 0;
  std::size_t r = 0;
  Resolution resolved_by = Resolution::Numeric;
  SpectralVerdict verdict = SpectralVerdict::Inconclusive;
};

inline constexpr std::size_t kMaxEscalationLog = 10000;

/// Partial result of one block of instances; blocks are merged in order.
struct Accumulator {
  std::uint64_t graphs = 0;
  std::map<std::pair<TheoremId, std::size_t>, TheoremTally> tallies;
  std::vector<Json> counterexamples;
  std::vector<EscalationRecord> escalations;
  std::uint64_t escalation_total = 0;
  std::vector<Json> rows;  // per-instance rows (family sweep, tightness)

  void record(std::uint64_t index, const TheoremVerdict& v, const Graph& g) {
    auto& t = tallies[{v.theorem, v.r}];
    ++t.instances;
    ++t.hypothesis[static_cast<int>(v.hypothesis)];
    if (v.hypothesis == Tri::Yes) ++t.conclusion_given_hypothesis[static_cast<int>(v.conclusion)];
    if (v.is_inconclusive()) ++t.inconclusive;
    if (!v.in_regime) ++t.out_of_regime;
    if (v.vacuous) ++t.vacuous;
    if (v.spectral && v.spectral->initial_verdict == SpectralVerdict::Inconclusive) {
      ++t.escalated;
      ++t.resolved_by[static_cast<int>(v.spectral->resolved_by)];
      ++escalation_total;
      if (escalations.size() < kMaxEscalationLog) {
        escalations.push_back({index, v.theorem, v.n, v.r, v.spectral->resolved_by, v.spectral->verdict});
      }
    }
    if (v.hypothesis == Tri::Yes) {
      for (const auto& rec : v.inequalities) {
        const Rational slack = rec.lhs - rec.rhs;
        auto it = t.min_slack.find(rec.name);
        if (it == t.min_slack.end()) {
          t.min_slack.emplace(rec.name, Slack{slack, index});
        } else if (slack < it->second.value) {
          it->second = {slack, index};
        }
      }
      if (v.lhs && denominator(*v.lhs) == 1) ++t.lhs_histogram[*v.lhs];
    }
    if (v.is_counterexample()) {
      ++t.counterexamples;
      Json j = {{"index", index}};
      j.update(to_json(v, &g, true));
      counterexamples.push_back(std::move(j));
    }
  }

  void merge(Accumulator&& o) {
    graphs += o.graphs;
    for (auto& [k, t] : o.tallies) tallies[k].merge(t);
    for (auto& c : o.counterexamples) counterexamples.push_back(std::move(c));
    escalation_total += o.escalation_total;
    for (auto& e : o.escalations) {
      if (escalations.size() < kMaxEscalationLog) escalations.push_back(e);
    }
    for (auto& r : o.rows) rows.push_back(std::move(r));
  }
};

struct ExperimentReport {
  ExperimentConfig config;
  std::uint64_t graphs_checked = 0;
  std::uint64_t instances_checked = 0;
  Accumulator acc;
  Json extra;  // mode-specific summary (tightness)
  double wall_seconds = 0.0;

  std::uint64_t counterexample_count() const { return acc.counterexamples.size(); }

  std::uint64_t inconclusive_count() const {
    std::uint64_t total = 0;
    for (const auto& [k, t] : acc.tallies) total += t.inconclusive;
    return total;
  }

  /// Deterministic report; wall time is excluded (see meta_json).
  Json to_json() const {
    Json summary = Json::array();
    for (const auto& [key, t] : acc.tallies) {
      Json slack = Json::object();
      for (const auto& [name, s] : t.min_slack) {
        slack[name] = {{"value", to_string(s.value)}, {"approx", to_double(s.value)}, {"index", s.index}};
      }
      Json hist = Json::array();
      for (const auto& [v, c] : t.lhs_histogram) hist.push_back(Json::array({to_string(v), c}));
      summary.push_back({{"theorem", theorem_name(key.first)},
                         {"r", key.second},
                         {"instances", t.instances},
                         {"hypothesis", {{"yes", t.hypothesis[0]}, {"no", t.hypothesis[1]}, {"inconclusive", t.hypothesis[2]}}},
                         {"conclusion_when_hypothesis_yes",
                          {{"yes", t.conclusion_given_hypothesis[0]},
                           {"no", t.conclusion_given_hypothesis[1]},
                           {"inconclusive", t.conclusion_given_hypothesis[2]}}},
                         {"counterexamples", t.counterexamples},
                         {"inconclusive", t.inconclusive},
                         {"out_of_regime", t.out_of_regime},
                         {"vacuous", t.vacuous},
                         {"spectral_escalations",
                          {{"initially_inconclusive", t.escalated},
                           {"refined", t.resolved_by[static_cast<int>(Resolution::Refined)]},
                           {"exact", t.resolved_by[static_cast<int>(Resolution::Exact)]},
                           {"unresolved", t.resolved_by[static_cast<int>(Resolution::Unresolved)]}}},
                         {"min_slack", std::move(slack)},
                         {"lhs_histogram", std::move(hist)}});
    }
    Json esc = Json::array();
    for (const auto& e : acc.escalations) {
      esc.push_back({{"index", e.index},
                     {"theorem", theorem_name(e.theorem)},
                     {"n", e.n},
                     {"r", e.r},
                     {"resolved_by", to_string(e.resolved_by)},
                     {"verdict", to_string(e.verdict)}});
    }
    Json out = {{"config", config.to_json()},
                {"graphs_checked", graphs_checked},
                {"instances_checked", instances_checked},
                {"counterexample_count", acc.counterexamples.size()},
                {"counterexamples", acc.counterexamples},
                {"summary", std::move(summary)},
                {"escalations", {{"total", acc.escalation_total}, {"logged", std::move(esc)}}}};
    if (!acc.rows.empty()) out["instances"] = acc.rows;
    if (!extra.is_null()) out["tightness"] = extra;
    return out;
  }

  Json meta_json() const {
    return {{"wall_time_seconds", wall_seconds}, {"threads", config.threads}};
  }

  /// One row per (theorem, r).
  std::string summary_csv() const {
    std::ostringstream out;
    out << "theorem,r,instances,hypothesis_yes,hypothesis_no,hypothesis_inconclusive,"
           "conclusion_yes,conclusion_no,conclusion_inconclusive,counterexamples,inconclusive,out_of_regime\n";
    for (const auto& [key, t] : acc.tallies) {
      out << theorem_name(key.first) << ',' << key.second << ',' << t.instances << ',' << t.hypothesis[0] << ','
          << t.hypothesis[1] << ',' << t.hypothesis[2] << ',' << t.conclusion_given_hypothesis[0] << ','
          << t.conclusion_given_hypothesis[1] << ',' << t.conclusion_given_hypothesis[2] << ',' << t.counterexamples
          << ',' << t.inconclusive << ',' << t.out_of_regime << '\n';
    }
    return out.str();
  }
};

namespace detail {

inline constexpr std::uint64_t kBlockSize = 2048;

// Runs work(block_begin, block_end, acc) over [0, total) in fixed-size
// blocks on up to `threads` workers and merges the partial accumulators in
// block order, so the result does not depend on the thread count.
inline Accumulator run_blocks(std::uint64_t total, std::size_t threads,
                              const std::function<void(std::uint64_t, std::uint64_t, Accumulator&)>& work) {
  const std::uint64_t blocks = (total + kBlockSize - 1) / kBlockSize;
  std::vector<Accumulator> parts(blocks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    while (!failed.load()) {
      const std::uint64_t b = next.fetch_add(1);
      if (b >= blocks) return;
      try {
        work(b * kBlockSize, std::min(total, (b + 1) * kBlockSize), parts[b]);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const std::size_t count = std::max<std::size_t>(1, std::min<std::uint64_t>(threads, blocks));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  Accumulator acc;
  for (auto& p : parts) acc.merge(std::move(p));
  return acc;
}

inline std::uint64_t pair_count(std::size_t n) { return static_cast<std::uint64_t>(n) * (n - 1) / 2; }

// Applies every configured theorem for every configured r to one graph.
inline void check_all(const ExperimentConfig& cfg, std::uint64_t index, const Graph& g, Accumulator& acc) {
  GraphFacts facts(g);
  for (auto rr : cfg.r) {
    const auto p = cfg.params(rr);
    for (auto id : cfg.theorems) acc.record(index, check(id, facts, p), g);
  }
}

}  // namespace detail

/// All labelled graphs of each order in [n_min, n_max] in edge-mask order,
/// or `sample_cap` uniform masks per order. Graph indices run consecutively
/// across orders; within an order the index of a full scan is the mask.
inline ExperimentReport run_exhaustive(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.mode != ExperimentMode::Exhaustive) throw ConfigError("run_exhaustive: wrong mode");
  ExperimentReport report;
  report.config = cfg;
  std::uint64_t offset = 0;
  for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
    const std::uint64_t pairs = detail::pair_count(n);
    const std::uint64_t all = std::uint64_t{1} << pairs;
    const std::uint64_t count = cfg.sample_cap > 0 ? cfg.sample_cap : all;
    const std::uint64_t seed = cfg.seed.value_or(kDefaultSeed) ^ n;
    auto acc = detail::run_blocks(count, cfg.threads, [&](std::uint64_t lo, std::uint64_t hi, Accumulator& a) {
      for (std::uint64_t i = lo; i < hi; ++i) {
        const std::uint64_t mask = cfg.sample_cap > 0 ? SplitMix64(derive_seed(seed, i)).below(all) : i;
        const Graph g = graph_from_mask(n, mask);
        ++a.graphs;
        detail::check_all(cfg, offset + i, g, a);
      }
    });
    report.acc.merge(std::move(acc));
    offset += count;
  }
  report.graphs_checked = report.acc.graphs;
  report.instances_checked = report.graphs_checked * cfg.r.size() * cfg.theorems.size();
  return report;
}

/// Member of a structured family, or nullopt when the family has no member
/// with these parameters.
inline std::optional<Graph> make_family(std::string_view family, std::size_t n, std::size_t r) {
  if (family == "turan") return make_turan(n, r);
  const auto sizes = turan_part_sizes(n, r);
  if (family == "turan_plus") {
    // extra edge inside the first (largest) part
    if (sizes[0] < 2) return std::nullopt;
    return make_turan(n, r).with_edge(0, 1);
  }
  if (family == "turan_minus") {
    Graph g = make_turan(n, r);
    if (g.edge_count() == 0) return std::nullopt;
    return g.without_edge(g.edges().front().first, g.edges().front().second);
  }
  if (family == "kr_plus") {
    // K_r^+ on the Turán part sizes with the extra edge in the smallest part
    std::vector<std::size_t> rev(sizes.rbegin(), sizes.rend());
    if (rev[0] < 2 || std::find(rev.begin(), rev.end(), 0) != rev.end()) return std::nullopt;
    return make_kr_plus(PartSpec(std::move(rev)));
  }
  if (family == "book") {
    if (r > n) return std::nullopt;
    return make_book(n, r);
  }
  throw ConfigError("unknown family '" + std::string(family) + "'");
}

/// For each family, n and r in range: build the member and apply the checkers.
/// Each instance also contributes a row with both sides of its conclusion.
inline ExperimentReport run_family_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.mode != ExperimentMode::FamilySweep) throw ConfigError("run_family_sweep: wrong mode");
  struct Item {
    std::string family;
    std::size_t n, r;
  };
  std::vector<Item> items;
  for (const auto& f : cfg.families)
    for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n)
      for (auto rr : cfg.r) items.push_back({f, n, rr});

  ExperimentReport report;
  report.config = cfg;
  report.acc = detail::run_blocks(items.size(), cfg.threads, [&](std::uint64_t lo, std::uint64_t hi, Accumulator& a) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const auto& it = items[i];
      const auto g = make_family(it.family, it.n, it.r);
      if (!g) continue;
      ++a.graphs;
      GraphFacts facts(*g);
      const auto p = cfg.params(it.r);
      for (auto id : cfg.theorems) {
        const auto v = check(id, facts, p);
        a.record(i, v, *g);
        a.rows.push_back({{"index", i},
                          {"family", it.family},
                          {"n", it.n},
                          {"r", it.r},
                          {"theorem", theorem_name(id)},
                          {"hypothesis", to_string(v.hypothesis)},
                          {"conclusion", to_string(v.conclusion)},
                          {"in_regime", v.in_regime},
                          {"branch", v.branch ? Json(std::string(1, *v.branch)) : Json()},
                          {"lhs", optional_rational(v.lhs)},
                          {"rhs", optional_rational(v.rhs)}});
      }
    }
  });
  report.graphs_checked = report.acc.graphs;
  report.instances_checked = report.graphs_checked * cfg.theorems.size();
  return report;
}

/// Edge count of the random hunt for (n, r): e(T_r(n)) + offset, clamped.
inline std::uint64_t hunt_edge_count(std::size_t n, std::size_t r, std::int64_t offset) {
  const auto e = static_cast<std::int64_t>(turan_edge_count(n, r));
  const auto pairs = static_cast<std::int64_t>(detail::pair_count(n));
  return static_cast<std::uint64_t>(std::clamp<std::int64_t>(e + offset, 0, pairs));
}

/// `trials` samples of G(n, m) for each n and r, m near e(T_r(n)).
/// Sample i uses derive_seed(seed, i).
inline ExperimentReport run_random_hunt(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.mode != ExperimentMode::RandomHunt) throw ConfigError("run_random_hunt: wrong mode");
  struct Item {
    std::size_t n, r;
  };
  std::vector<Item> cells;
  for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n)
    for (auto rr : cfg.r) cells.push_back({n, rr});
  const std::uint64_t total = cells.size() * cfg.trials;
  const std::uint64_t seed = *cfg.seed;

  ExperimentReport report;
  report.config = cfg;
  report.acc = detail::run_blocks(total, cfg.threads, [&](std::uint64_t lo, std::uint64_t hi, Accumulator& a) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const auto& cell = cells[i / cfg.trials];
      const Graph g = random_gnm(cell.n, hunt_edge_count(cell.n, cell.r, cfg.m_offset), derive_seed(seed, i));
      ++a.graphs;
      GraphFacts facts(g);
      const auto p = cfg.params(cell.r);
      for (auto id : cfg.theorems) a.record(i, check(id, facts, p), g);
    }
  });
  report.graphs_checked = report.acc.graphs;
  report.instances_checked = report.graphs_checked * cfg.theorems.size();
  return report;
}

/// m = ceil((1 - epsilon) n^2 / 2), clamped to C(n, 2).
inline std::uint64_t tightness_edge_count(std::size_t n, double epsilon) {
  const Rational m = (Rational(1) - exact_rational(epsilon)) * Rational(static_cast<long long>(n * n)) / 2;
  BigInt q = numerator(m) / denominator(m);
  if (Rational(q) < m) q += 1;
  const BigInt pairs = detail::pair_count(n);
  if (q > pairs) q = pairs;
  if (q < 0) q = 0;
  return q.convert_to<std::uint64_t>();
}

/// Random graphs with ceil((1 - epsilon) n^2 / 2) edges: fraction with
/// certified mu > (1 - epsilon) n, and the K_2(s, s) subgraphs present for
/// s = floor(c ln n) over the c grid and for s = 1, 2, ... until the first
/// failure. A statistical report; nothing here is pass/fail.
inline ExperimentReport run_tightness(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.mode != ExperimentMode::Tightness) throw ConfigError("run_tightness: wrong mode");
  const std::size_t orders = cfg.n_max - cfg.n_min + 1;
  const std::uint64_t total = orders * cfg.trials;
  const std::uint64_t seed = *cfg.seed;

  ExperimentReport report;
  report.config = cfg;
  report.acc = detail::run_blocks(total, cfg.threads, [&](std::uint64_t lo, std::uint64_t hi, Accumulator& a) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::size_t n = cfg.n_min + i / cfg.trials;
      const std::uint64_t m = tightness_edge_count(n, cfg.epsilon);
      const Graph g = random_gnm(n, m, derive_seed(seed, i));
      ++a.graphs;
      const Rational bound = (Rational(1) - exact_rational(cfg.epsilon)) * Rational(static_cast<long long>(n));
      const auto cmp = compare_mu_to_bound(g, bound, cfg.tol, cfg.params(2).resolve);
      Json per_c = Json::array();
      for (double c : cfg.c_grid) {
        const auto s = floor_c_ln_n(c, n);
        Json entry = {{"c", c}, {"s", s}};
        if (s < 1) {
          entry["status"] = "vacuous";
        } else {
          const auto out = find_complete_multipartite(
              g, PartSpec({static_cast<std::size_t>(s), static_cast<std::size_t>(s)}), cfg.budget);
          entry["status"] = to_string(out.status);
        }
        per_c.push_back(std::move(entry));
      }
      std::size_t largest = 0;
      std::string stop = "ABSENT";
      for (std::size_t s = 1; 2 * s <= n; ++s) {
        const auto out = find_complete_multipartite(g, PartSpec({s, s}), cfg.budget);
        if (out.status != SearchStatus::Found) {
          stop = to_string(out.status);
          break;
        }
        largest = s;
      }
      a.rows.push_back({{"index", i},
                        {"n", n},
                        {"m", m},
                        {"mu", to_json(cmp.mu_g)},
                        {"mu_bound", to_string(bound)},
                        {"mu_greater", to_string(cmp.verdict)},
                        {"per_c", std::move(per_c)},
                        {"largest_s", largest},
                        {"stopped_by", stop}});
    }
  });
  report.graphs_checked = report.acc.graphs;
  report.instances_checked = report.graphs_checked;

  // Per-order aggregate.
  Json orders_json = Json::array();
  for (std::size_t k = 0; k < orders; ++k) {
    const std::size_t n = cfg.n_min + k;
    std::uint64_t greater = 0, not_greater = 0, inconclusive = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    std::map<std::size_t, std::uint64_t> largest_hist;
    std::vector<std::map<std::string, std::uint64_t>> per_c(cfg.c_grid.size());
    for (const auto& row : report.acc.rows) {
      if (row["n"].get<std::size_t>() != n) continue;
      const auto verdict = row["mu_greater"].get<std::string>();
      if (verdict == "greater") ++greater;
      else if (verdict == "not-greater") ++not_greater;
      else ++inconclusive;
      const double margin = row["mu"]["lower"].get<double>() - (1 - cfg.epsilon) * static_cast<double>(n);
      min_margin = std::min(min_margin, margin);
      ++largest_hist[row["largest_s"].get<std::size_t>()];
      for (std::size_t j = 0; j < cfg.c_grid.size(); ++j) ++per_c[j][row["per_c"][j]["status"].get<std::string>()];
    }
    Json hist = Json::array();
    for (const auto& [s, c] : largest_hist) hist.push_back(Json::array({s, c}));
    Json grid = Json::array();
    for (std::size_t j = 0; j < cfg.c_grid.size(); ++j) {
      grid.push_back({{"c", cfg.c_grid[j]}, {"s", floor_c_ln_n(cfg.c_grid[j], n)}, {"outcomes", per_c[j]}});
    }
    const double samples = static_cast<double>(cfg.trials);
    orders_json.push_back({{"n", n},
                           {"m", tightness_edge_count(n, cfg.epsilon)},
                           {"samples", cfg.trials},
                           {"mu_greater", greater},
                           {"mu_not_greater", not_greater},
                           {"mu_inconclusive", inconclusive},
                           {"mu_greater_fraction", samples > 0 ? static_cast<double>(greater) / samples : 0.0},
                           {"min_lower_margin", std::isfinite(min_margin) ? Json(min_margin) : Json()},
                           {"largest_s_histogram", std::move(hist)},
                           {"c_grid", std::move(grid)}});
  }
  report.extra = {{"epsilon", cfg.epsilon}, {"orders", std::move(orders_json)}};
  return report;
}

inline ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  switch (cfg.mode) {
    case ExperimentMode::Exhaustive: report = run_exhaustive(cfg); break;
    case ExperimentMode::FamilySweep: report = run_family_sweep(cfg); break;
    case ExperimentMode::RandomHunt: report = run_random_hunt(cfg); break;
    case ExperimentMode::Tightness: report = run_tightness(cfg); break;
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace turanlab
