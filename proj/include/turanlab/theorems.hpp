#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "turanlab/bounds.hpp"
#include "turanlab/cliques.hpp"
#include "turanlab/embedding.hpp"
#include "turanlab/exact.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/spectral.hpp"
#include "turanlab/stability.hpp"

namespace turanlab {

enum class TheoremId {
  T1,
  T2,
  T3,
  T1_2,
  T2_2,
  T3_2,
  FactSTT,
  FactLeNSMM,
  FactTsize,
  FactLeKd,
  FactThv4,
  FactTstab,
  EdgeImpliesSpectral,
  BookRemark,
};

inline constexpr std::pair<TheoremId, std::string_view> kTheoremNames[] = {
    {TheoremId::T1, "t1"},
    {TheoremId::T2, "t2"},
    {TheoremId::T3, "t3"},
    {TheoremId::T1_2, "t1.2"},
    {TheoremId::T2_2, "t2.2"},
    {TheoremId::T3_2, "t3.2"},
    {TheoremId::FactSTT, "stt"},
    {TheoremId::FactLeNSMM, "lensmm"},
    {TheoremId::FactTsize, "tsize"},
    {TheoremId::FactLeKd, "lekd"},
    {TheoremId::FactThv4, "thv4"},
    {TheoremId::FactTstab, "tstab"},
    {TheoremId::EdgeImpliesSpectral, "edge-spectral"},
    {TheoremId::BookRemark, "book"},
};

inline std::string_view theorem_name(TheoremId id) {
  for (auto [k, name] : kTheoremNames)
    if (k == id) return name;
  return "?";
}

inline std::optional<TheoremId> parse_theorem(std::string_view s) {
  for (auto [k, name] : kTheoremNames)
    if (name == s) return k;
  return std::nullopt;
}

enum class Tri { Yes, No, Inconclusive };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Inconclusive: return "inconclusive";
  }
  return "?";
}

inline Tri to_tri(SpectralVerdict v) {
  switch (v) {
    case SpectralVerdict::GreaterCertified: return Tri::Yes;
    case SpectralVerdict::NotGreaterCertified: return Tri::No;
    case SpectralVerdict::Inconclusive: return Tri::Inconclusive;
  }
  return Tri::Inconclusive;
}

/// Which reading of the stability fact's conclusion to use: its hypothesis
/// bounds b but the conclusion is written with c.
enum class TstabReading { UseB, UseC };

struct TheoremParams {
  std::size_t r = 2;
  /// Density exponent; when absent each checker uses the largest value its
  /// statement allows.
  std::optional<double> c;
  /// Stability slack; when absent, half of the admissible maximum 2^-10 r^-6.
  std::optional<double> b;
  double tol = kDefaultTolerance;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t coloring_cap = kDefaultColoringCap;
  /// Ties and near-ties are refined and then decided exactly up to order 16.
  ResolvePolicy resolve = ResolvePolicy::full();
  TstabReading tstab_reading = TstabReading::UseB;
};

struct CliqueCertificate {
  std::vector<Vertex> vertices;
};

struct EmbeddingCertificate {
  PartSpec target;
  Embedding embedding;
};

using Certificate =
    std::variant<std::monostate, CliqueCertificate, JointReport, EmbeddingCertificate, StabilityWitness, BookReport>;

/// One side-by-side comparison recorded in a verdict. Numerically enclosed
/// sides carry a radius; exact sides have radius 0.
struct InequalityRecord {
  std::string name;
  std::string relation;  // ">", ">=", "<="
  Rational lhs;
  Rational rhs;
  Rational lhs_radius{0};
  Tri holds = Tri::Inconclusive;
};

struct TheoremVerdict {
  TheoremId theorem = TheoremId::FactSTT;
  std::size_t n = 0;
  std::size_t r = 0;
  TheoremParams params;
  Tri hypothesis = Tri::Inconclusive;
  Tri conclusion = Tri::Inconclusive;
  bool in_regime = true;
  /// Conclusion holds trivially because a target part size rounded to 0.
  bool vacuous = false;
  /// Stability theorems: which condition carried the conclusion.
  std::optional<char> branch;
  std::optional<WitnessStatus> witness_status;
  Certificate certificate;
  /// Sides of the conclusion inequality, when it has one.
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  std::vector<InequalityRecord> inequalities;
  std::optional<SpectralComparison> spectral;
  std::optional<PartSpec> target;
  std::string note;

  bool is_counterexample() const { return hypothesis == Tri::Yes && conclusion == Tri::No; }
  bool is_inconclusive() const {
    return hypothesis == Tri::Inconclusive || (hypothesis == Tri::Yes && conclusion == Tri::Inconclusive);
  }
};

/// Memoised per-graph quantities shared by several checkers.
class GraphFacts {
 public:
  explicit GraphFacts(const Graph& g) : g_(g) {}

  const Graph& graph() const { return g_; }

  const SpectralEstimate& mu(double tol) {
    auto it = mu_.find(tol);
    if (it == mu_.end()) it = mu_.emplace(tol, spectral_radius(g_, tol)).first;
    return it->second;
  }

  const std::optional<std::vector<Vertex>>& clique(std::size_t k) {
    auto it = clique_.find(k);
    if (it == clique_.end()) it = clique_.emplace(k, clique_exists(g_, k)).first;
    return it->second;
  }

  Count cliques(std::size_t k) {
    auto it = count_.find(k);
    if (it == count_.end()) it = count_.emplace(k, count_cliques(g_, k).count).first;
    return it->second;
  }

  const JointReport& joint(std::size_t k) {
    auto it = joint_.find(k);
    if (it == joint_.end()) it = joint_.emplace(k, joint_size(g_, k)).first;
    return it->second;
  }

 private:
  const Graph& g_;
  std::map<double, SpectralEstimate> mu_;
  std::map<std::size_t, std::optional<std::vector<Vertex>>> clique_;
  std::map<std::size_t, Count> count_;
  std::map<std::size_t, JointReport> joint_;
};

namespace detail {

inline Rational q(std::uint64_t v) { return Rational(BigInt(v)); }
inline Rational q(Count v) {
  BigInt b = static_cast<std::uint64_t>(v >> 64);
  b <<= 64;
  b += static_cast<std::uint64_t>(v);
  return Rational(b);
}

inline Tri tri(bool b) { return b ? Tri::Yes : Tri::No; }

inline void require_r(std::size_t r) {
  if (r < 2) throw std::invalid_argument("theorem checks need r >= 2");
}

inline void require_nonempty(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("theorem checks need a non-empty graph");
}

inline InequalityRecord spectral_record(std::string name, const SpectralComparison& cmp) {
  InequalityRecord rec;
  rec.name = std::move(name);
  rec.relation = ">";
  rec.lhs = exact_rational(cmp.mu_g.value);
  rec.lhs_radius = exact_rational(cmp.mu_g.radius());
  rec.rhs = exact_rational(cmp.threshold);
  rec.holds = to_tri(cmp.verdict);
  return rec;
}

// hypothesis: mu(G) > mu(T_r(n)), certified.
inline void spectral_turan_hypothesis(TheoremVerdict& v, GraphFacts& facts, const TheoremParams& p) {
  const auto& mu = facts.mu(p.tol);
  auto cmp = compare_mu_to_turan(facts.graph(), p.r, p.tol, p.resolve, &mu);
  v.hypothesis = to_tri(cmp.verdict);
  v.inequalities.push_back(spectral_record("mu(G) > mu(T_r(n))", cmp));
  v.spectral = cmp;
}

// js_{r+1}(G) > n^{r-1} / r^{exponent}
inline void joint_conclusion(TheoremVerdict& v, GraphFacts& facts, std::size_t exponent) {
  const std::size_t r = v.r;
  const auto& js = facts.joint(r + 1);
  const Rational lhs = q(js.size);
  const Rational rhs(ipow(BigInt(v.n), static_cast<unsigned>(r - 1)), ipow(BigInt(r), static_cast<unsigned>(exponent)));
  const bool holds = lhs > rhs;
  v.lhs = lhs;
  v.rhs = rhs;
  v.inequalities.push_back({"js_{r+1}(G) > n^{r-1}/r^" + std::to_string(exponent), ">", lhs, rhs, Rational(0),
                            tri(holds)});
  v.conclusion = tri(holds);
  if (holds) v.certificate = js;
}

// Contains a K_{r+1} and delta(G) > (1 - 1/r - 1/r^4) n.
inline Tri min_degree_clique_hypothesis(TheoremVerdict& v, GraphFacts& facts) {
  const std::size_t r = v.r;
  const bool has_clique = facts.clique(r + 1).has_value();
  const BigInt r4 = ipow(BigInt(r), 4);
  const Rational lhs = q(static_cast<std::uint64_t>(facts.graph().min_degree()));
  const Rational rhs = Rational(r4 - ipow(BigInt(r), 3) - 1, r4) * Rational(static_cast<long long>(v.n));
  const bool deg_ok = lhs > rhs;
  v.inequalities.push_back({"delta(G) > (1-1/r-1/r^4)n", ">", lhs, rhs, Rational(0), tri(deg_ok)});
  v.inequalities.push_back({"k_{r+1}(G) >= 1", ">=", q(static_cast<std::uint64_t>(has_clique ? 1 : 0)), Rational(1),
                            Rational(0), tri(has_clique)});
  return tri(has_clique && deg_ok);
}

inline PartSpec plus_spec(std::size_t r, std::int64_t s, std::optional<std::int64_t> last) {
  std::vector<std::size_t> sizes(r, static_cast<std::size_t>(s));
  if (last) sizes.back() = static_cast<std::size_t>(*last);
  sizes.front() = std::max<std::size_t>(2, sizes.front());
  for (auto& x : sizes) x = std::max<std::size_t>(1, x);
  return PartSpec(std::move(sizes));
}

// G contains K_r^+(floor(c ln n), ..., [last]); tri-state with budget.
inline Tri kr_plus_conclusion(TheoremVerdict& v, const Graph& g, double c, std::optional<std::int64_t> last,
                              std::uint64_t budget) {
  const std::int64_t s = floor_c_ln_n(c, v.n);
  if (s <= 0) {
    v.vacuous = true;
    v.note = "floor(c ln n) = 0: target is vacuous";
    return Tri::Yes;
  }
  const PartSpec spec = plus_spec(v.r, s, last);
  v.target = spec;
  const auto out = find_kr_plus(g, spec, budget);
  switch (out.status) {
    case SearchStatus::Found:
      if (auto err = validate_embedding(g, spec, *out.embedding, true)) {
        throw std::logic_error("finder returned an invalid embedding: " + *err);
      }
      v.certificate = EmbeddingCertificate{spec, *out.embedding};
      return Tri::Yes;
    case SearchStatus::Absent: return Tri::No;
    case SearchStatus::BudgetExhausted:
      v.note = "embedding search budget exhausted";
      return Tri::Inconclusive;
  }
  return Tri::Inconclusive;
}

inline double default_b(std::size_t r) { return std::ldexp(1.0, -11) / std::pow(static_cast<double>(r), 6); }

inline TheoremVerdict start(TheoremId id, const Graph& g, const TheoremParams& p) {
  TheoremVerdict v;
  v.theorem = id;
  v.n = g.order();
  v.r = p.r;
  v.params = p;
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Spectral Turán theorem: mu(G) > mu(T_r(n)) forces a K_{r+1}.

inline TheoremVerdict check_spectral_turan(GraphFacts& facts, const TheoremParams& p) {
  const Graph& g = facts.graph();
  detail::require_r(p.r);
  detail::require_nonempty(g);
  auto v = detail::start(TheoremId::FactSTT, g, p);
  detail::spectral_turan_hypothesis(v, facts, p);
  const auto& k = facts.clique(p.r + 1);
  v.conclusion = detail::tri(k.has_value());
  if (k) v.certificate = CliqueCertificate{*k};
  return v;
}

// Joint statement: js_{r+1}(G) > n^{r-1}/r^{2r+4}, stated for n > r^15.
inline TheoremVerdict check_theorem1(GraphFacts& facts, const TheoremParams& p) {
  const Graph& g = facts.graph();
  detail::require_r(p.r);
  detail::require_nonempty(g);
  auto v = detail::start(TheoremId::T1, g, p);
  v.in_regime = BigInt(v.n) > ipow(BigInt(p.r), 15);
  detail::spectral_turan_hypothesis(v, facts, p);
  detail::joint_conclusion(v, facts, 2 * p.r + 4);
  return v;
}

// Unbalanced embedding: K_r^+(floor(c ln n), ..., ceil(n^{1-sqrt c})).
inline TheoremVerdict check_theorem2(GraphFacts& facts, const TheoremParams& p) {
  const Graph& g = facts.graph();
  detail::require_r(p.r);
  detail::require_nonempty(g);
  auto v = detail::start(TheoremId::T2, g, p);
  const std::size_t exponent = (2 * p.r + 9) * (p.r + 1);
  const double c = p.c.value_or(default_c(p.r, exponent));
  v.params.c = c;
  v.in_regime = c_at_least_two_over_ln(c, v.n) && c_at_most(c, p.r, exponent);
  detail::spectral_turan_hypothesis(v, facts, p);
  v.conclusion = detail::kr_plus_conclusion(v, g, c, ceil_n_pow_one_minus(1.0, c, v.n), p.budget);
  return v;
}

// Balanced embedding: K_r^+(floor(c ln n), ..., floor(c ln n)), c = r^{-(2r+9)(r+1)}, n >= e^{2/c}.
inline TheoremVerdict check_theorem3(GraphFacts& facts, const TheoremParams& p) {
  const Graph& g = facts.graph();
  detail::require_r(p.r);
  detail::require_nonempty(g);
  auto v = detail::start(TheoremId::T3, g, p);
  const std::size_t exponent = (2 * p.r + 9) * (p.r + 1);
  const double c = p.c.value_or(default_c(p.r, exponent));
  v.params.c = c;
  v.in_regime = n_at_least_exp_two_over(c, v.n) && c_at_most(c, p.r, exponent);
  detail::spectral_turan_hypothesis(v, facts, p);
  v.conclusion = detail::kr_plus_conclusion(v, g, c, std::nullopt, p.budget);
  return v;
}

/// Order and minimum-degree thresholds of the stability structure:
/// |G_0| >= (1 - order_k x^{1/3}) n and delta(G_0) > (1 - 1/r - degree_k x^{1/3}) n.
struct StabilityBounds {
  CubeRootBound order;
  CubeRootBound degree;
};

inline StabilityBounds stability_bounds(std::size_t n, std::size_t r, const Rational& x, unsigned order_k,
                                        unsigned degree_k) {
  return {CubeRootBound(Rational(1), Rational(order_k), x, n),
          CubeRootBound(Rational(1) - Rational(1, static_cast<long long>(r)), Rational(degree_k), x, n)};
}

inline WitnessOutcome find_stability_witness(const Graph& g, std::size_t r, const StabilityBounds& bounds,
                                             std::uint64_t cap = kDefaultColoringCap) {
  return find_stability_witness(g, r, bounds.order, bounds.degree, cap);
}

// Theorems 1.2 / 2.2 / 3.2: mu(G) > (1 - 1/r - b) n implies (a) or (b).
inline TheoremVerdict check_stability(GraphFacts& facts, const TheoremParams& p, TheoremId which) {
  const Graph& g = facts.graph();
  detail::require_r(p.r);
  detail::require_nonempty(g);
  if (which != TheoremId::T1_2 && which != TheoremId::T2_2 && which != TheoremId::T3_2) {
    throw std::invalid_argument("check_stability: not a stability theorem");
  }
  auto v = detail::start(which, g, p);
  const std::size_t r = p.r;
  const double b = p.b.value_or(detail::default_b(r));
  if (!(b > 0)) throw std::invalid_argument("check_stability: b must be positive");
  v.params.b = b;
  const Rational bq = exact_rational(b);
  const Rational b_max(BigInt(1), BigInt(1024) * ipow(BigInt(r), 6));
  bool regime = bq > 0 && bq < b_max;

  const Rational bound = (Rational(1) - Rational(1, static_cast<long long>(r)) - bq) * Rational(static_cast<long long>(v.n));
  const auto& mu = facts.mu(p.tol);
  const auto cmp = compare_mu_to_bound(g, bound, p.tol, p.resolve, &mu);
  v.hypothesis = to_tri(cmp.verdict);
  v.inequalities.push_back(detail::spectral_record("mu(G) > (1-1/r-b)n", cmp));
  v.spectral = cmp;

  // Condition (a).
  Tri a = Tri::Inconclusive;
  const std::size_t exponent = (2 * r + 9) * (r + 1);
  if (which == TheoremId::T1_2) {
    regime = regime && BigInt(v.n) >= ipow(BigInt(r), 20);
    detail::joint_conclusion(v, facts, 2 * r + 5);
    a = v.conclusion;
  } else {
    const double c = p.c.value_or(default_c(r, exponent, 2));
    v.params.c = c;
    if (which == TheoremId::T2_2) {
      regime = regime && c_at_least_two_over_ln(c, v.n) && c_at_most(c, r, exponent, 2);
      a = detail::kr_plus_conclusion(v, g, c, ceil_n_pow_one_minus(2.0, c, v.n), p.budget);
    } else {
      regime = regime && n_at_least_exp_two_over(c, v.n) && c_at_most(c, r, exponent, 2);
      a = detail::kr_plus_conclusion(v, g, c, std::nullopt, p.budget);
    }
  }
  v.in_regime = regime;

  // Condition (b).
  const auto bounds = stability_bounds(v.n, r, bq, 4, 7);
  auto w = find_stability_witness(g, r, bounds.order, bounds.degree, p.coloring_cap);
  if (a != Tri::Yes && w.status == WitnessStatus::NotFound && v.n <= kExhaustiveWitnessMaxOrder) {
    w = search_stability_witness(g, r, bounds.order, bounds.degree, p.coloring_cap);
  }
  v.witness_status = w.status;
  v.inequalities.push_back({"|G_0| >= (1-4b^{1/3})n", ">=",
                            w.witness ? Rational(static_cast<long long>(w.witness->subset.size())) : Rational(0),
                            exact_rational(bounds.order.approx()), Rational(0),
                            w.witness ? Tri::Yes : (w.status == WitnessStatus::Refuted ? Tri::No : Tri::Inconclusive)});

  if (a == Tri::Yes) {
    v.conclusion = Tri::Yes;
    v.branch = 'a';
  } else if (w.status == WitnessStatus::Found) {
    v.conclusion = Tri::Yes;
    v.branch = 'b';
    v.vacuous = false;
    v.certificate = *w.witness;
  } else if (a == Tri::No && w.status == WitnessStatus::Refuted) {
    v.conclusion = Tri::No;
  } else {
    v.conclusion = Tri::Inconclusive;
    if (v.note.empty()) v.note = std::string("condition (b): witness ") + to_string(w.status);
  }
  return v;
}

// k_r(G) >= (mu/n - 1 + 1/r) r(r-1)/(r+1) (n/r)^{r+1}.
inline TheoremVerdict check_fact_lenslmm(GraphFacts& facts, const TheoremParams& p) {
  const Graph& g = facts.graph();
  detail::require_r(p.r);
  detail::require_nonempty(g);
  auto v = detail::start(TheoremId::FactLeNSMM, g, p);
  const std::size_t r = p.r;
  const Rational n(static_cast<long long>(v.n));
  const Rational rr(static_cast<long long>(r));
  const Rational coef = rr * (rr - 1) / (rr + 1) * rpow(n / rr, static_cast<unsigned>(r + 1));
  auto rhs_at = [&](const Rational& mu) { return (mu / n - 1 + 1 / rr) * coef; };
  const Rational lhs = detail::q(facts.cliques(r));
  v.hypothesis = Tri::Yes;
  v.lhs = lhs;

  auto decide = [&](const SpectralEstimate& mu) {
    if (!mu.converged) return Tri::Inconclusive;
    const Rational hi = rhs_at(exact_rational(mu.upper()));
    if (lhs >= hi) {
      v.rhs = hi;
      return Tri::Yes;
    }
    const Rational lo = rhs_at(exact_rational(mu.lower()));
    v.rhs = lo;
    return lhs < lo ? Tri::No : Tri::Inconclusive;
  };
  const auto& mu = facts.mu(p.tol);
  v.conclusion = decide(mu);
  if (v.conclusion == Tri::Inconclusive && p.resolve.refine) v.conclusion = decide(spectral_radius(g, p.resolve.refine_tol));
  if (v.conclusion == Tri::Inconclusive && v.n <= p.resolve.exact_max_order) {
    // k_r >= rhs(mu)  <=>  mu <= n (k_r / coef + 1 - 1/r)
    const Rational mu_max = n * (lhs / coef + 1 - 1 / rr);
    v.conclusion = detail::tri(!exact_mu_exceeds(g, mu_max));
    v.note = "decided exactly: mu(G) <= " + to_string(mu_max);
  }
  v.inequalities.push_back({"k_r(G) >= (mu/n-1+1/r) r(r-1)/(r+1) (n/r)^{r+1}", ">=", lhs, v.rhs.value_or(Rational(0)),
                            Rational(0), v.conclusion});
  return v;
}

// 2 e(T_r(n)) >= (1 - 1/r) n^2 - r/4, decided as 8r e >= 4(r-1)n^2 - r^2.
inline TheoremVerdict check_fact_tsize(std::size_t n, std::size_t r) {
  detail::require_r(r);
  TheoremVerdict v;
  v.theorem = TheoremId::FactTsize;
  v.n = n;
  v.r = r;
  v.params.r = r;
  v.hypothesis = Tri::Yes;
  const BigInt e = turan_edge_count(n, r);
  const BigInt nn(n), rr(r);
  const bool holds = 8 * rr * e >= 4 * (rr - 1) * nn * nn - rr * rr;
  v.lhs = Rational(2 * e);
  v.rhs = Rational(4 * (rr - 1) * nn * nn - rr * rr, 4 * rr);
  v.conclusion = detail::tri(holds);
  v.inequalities.push_back({"2e(T_r(n)) >= (1-1/r)n^2 - r/4", ">=", *v.lhs, *v.rhs, Rational(0), v.conclusion});
  return v;
}

// Contains K_{r+1} and delta > (1-1/r-1/r^4) n  =>  js_{r+1}(G) > n^{r-1}/r^{r+3}.
inline TheoremVerdict check_fact_lekd(GraphFacts& facts, const TheoremParams& p) {
  const Graph& g = facts.graph();
  detail::require_r(p.r);
  detail::require_nonempty(g);
  auto v = detail::start(TheoremId::FactLeKd, g, p);
  v.hypothesis = detail::min_degree_clique_hypothesis(v, facts);
  detail::joint_conclusion(v, facts, p.r + 3);
  return v;
}

// Same hypothesis  =>  K_r^+(floor(c ln n), ..., ceil(n^{1 - c r^3})).
inline TheoremVerdict check_fact_thv4(GraphFacts& facts, const TheoremParams& p) {
  const Graph& g = facts.graph();
  detail::require_r(p.r);
  detail::require_nonempty(g);
  auto v = detail::start(TheoremId::FactThv4, g, p);
  const std::size_t exponent = (p.r + 8) * p.r;
  const double c = p.c.value_or(default_c(p.r, exponent));
  v.params.c = c;
  v.in_regime = c_at_least_two_over_ln(c, v.n) && c_at_most(c, p.r, exponent);
  v.hypothesis = detail::min_degree_clique_hypothesis(v, facts);
  v.conclusion = detail::kr_plus_conclusion(v, g, c, ceil_n_pow_one_minus_cr3(c, p.r, v.n), p.budget);
  return v;
}

// No K_{r+1} and mu >= (1-1/r-b) n  =>  induced r-partite G_0 with
// |G_0| >= (1 - 3x^{1/3}) n, delta(G_0) > (1 - 1/r - 6x^{1/3}) n, x = b or c.
inline TheoremVerdict check_fact_tstab(GraphFacts& facts, const TheoremParams& p) {
  const Graph& g = facts.graph();
  detail::require_r(p.r);
  detail::require_nonempty(g);
  auto v = detail::start(TheoremId::FactTstab, g, p);
  const std::size_t r = p.r;
  const double b = p.b.value_or(detail::default_b(r));
  v.params.b = b;
  const Rational bq = exact_rational(b);
  v.in_regime = bq >= 0 && bq <= Rational(BigInt(1), BigInt(1024) * ipow(BigInt(r), 6));
  const Rational bound = (Rational(1) - Rational(1, static_cast<long long>(r)) - bq) * Rational(static_cast<long long>(v.n));

  const bool clique_free = !facts.clique(r + 1).has_value();
  const auto& mu = facts.mu(p.tol);
  // mu >= bound: certified when the lower end clears it; refuted when the
  // upper end is below it; exact fallback otherwise.
  Tri spectral = Tri::Inconclusive;
  if (mu.converged && exact_rational(mu.lower()) >= bound) spectral = Tri::Yes;
  else if (mu.converged && exact_rational(mu.upper()) < bound) spectral = Tri::No;
  else if (v.n <= p.resolve.exact_max_order) {
    // mu >= q  <=>  mu > q or q is itself the largest eigenvalue
    spectral = detail::tri(exact_mu_at_least(g, bound));
  }
  InequalityRecord rec{"mu(G) >= (1-1/r-b)n", ">=", exact_rational(mu.value), bound, exact_rational(mu.radius()), spectral};
  v.inequalities.push_back(rec);
  v.inequalities.push_back({"k_{r+1}(G) = 0", "<=", detail::q(static_cast<std::uint64_t>(clique_free ? 0 : 1)),
                            Rational(0), Rational(0), detail::tri(clique_free)});
  if (!clique_free) {
    v.hypothesis = Tri::No;
  } else {
    v.hypothesis = spectral;
  }

  Rational x = bq;
  if (p.tstab_reading == TstabReading::UseC) {
    if (!p.c) throw std::invalid_argument("tstab c-reading needs c");
    x = exact_rational(*p.c);
    v.note = "conclusion read with c";
  }
  const auto bounds = stability_bounds(v.n, r, x, 3, 6);
  auto w = find_stability_witness(g, r, bounds.order, bounds.degree, p.coloring_cap);
  if (w.status == WitnessStatus::NotFound && v.n <= kExhaustiveWitnessMaxOrder) {
    w = search_stability_witness(g, r, bounds.order, bounds.degree, p.coloring_cap);
  }
  v.witness_status = w.status;
  if (w.status == WitnessStatus::Found) {
    v.conclusion = Tri::Yes;
    v.branch = 'b';
    v.certificate = *w.witness;
  } else if (w.status == WitnessStatus::Refuted) {
    v.conclusion = Tri::No;
  } else {
    v.conclusion = Tri::Inconclusive;
  }
  return v;
}

// e(G) > e(T_r(n))  =>  mu(G) > mu(T_r(n)).
inline TheoremVerdict check_edge_implies_spectral(GraphFacts& facts, const TheoremParams& p) {
  const Graph& g = facts.graph();
  detail::require_r(p.r);
  detail::require_nonempty(g);
  auto v = detail::start(TheoremId::EdgeImpliesSpectral, g, p);
  const auto e = static_cast<std::uint64_t>(g.edge_count());
  const auto et = turan_edge_count(v.n, p.r);
  v.hypothesis = detail::tri(e > et);
  v.inequalities.push_back({"e(G) > e(T_r(n))", ">", detail::q(e), detail::q(et), Rational(0), v.hypothesis});
  const auto& mu = facts.mu(p.tol);
  const auto cmp = compare_mu_to_turan(g, p.r, p.tol, p.resolve, &mu);
  v.conclusion = to_tri(cmp.verdict);
  v.inequalities.push_back(detail::spectral_record("mu(G) > mu(T_r(n))", cmp));
  v.spectral = cmp;
  return v;
}

// mu(G) > mu(T_r(n))  =>  some r-clique lies in at least max(1, c n) (r+1)-cliques.
inline TheoremVerdict check_book_remark(GraphFacts& facts, const TheoremParams& p) {
  const Graph& g = facts.graph();
  detail::require_r(p.r);
  detail::require_nonempty(g);
  auto v = detail::start(TheoremId::BookRemark, g, p);
  const double c = p.c.value_or(0.0);
  v.params.c = c;
  detail::spectral_turan_hypothesis(v, facts, p);
  const auto book = book_size(g, p.r);
  const Rational lhs(static_cast<long long>(book.size));
  Rational rhs = exact_rational(c) * Rational(static_cast<long long>(v.n));
  if (rhs < 1) rhs = 1;
  v.lhs = lhs;
  v.rhs = rhs;
  v.conclusion = detail::tri(lhs >= rhs);
  v.inequalities.push_back({"book_r(G) >= max(1, c n)", ">=", lhs, rhs, Rational(0), v.conclusion});
  if (v.conclusion == Tri::Yes) v.certificate = book;
  return v;
}

/// Dispatch by id. FactTsize ignores the graph except for its order.
inline TheoremVerdict check(TheoremId id, GraphFacts& facts, const TheoremParams& p) {
  switch (id) {
    case TheoremId::T1: return check_theorem1(facts, p);
    case TheoremId::T2: return check_theorem2(facts, p);
    case TheoremId::T3: return check_theorem3(facts, p);
    case TheoremId::T1_2:
    case TheoremId::T2_2:
    case TheoremId::T3_2: return check_stability(facts, p, id);
    case TheoremId::FactSTT: return check_spectral_turan(facts, p);
    case TheoremId::FactLeNSMM: return check_fact_lenslmm(facts, p);
    case TheoremId::FactTsize: return check_fact_tsize(facts.graph().order(), p.r);
    case TheoremId::FactLeKd: return check_fact_lekd(facts, p);
    case TheoremId::FactThv4: return check_fact_thv4(facts, p);
    case TheoremId::FactTstab: return check_fact_tstab(facts, p);
    case TheoremId::EdgeImpliesSpectral: return check_edge_implies_spectral(facts, p);
    case TheoremId::BookRemark: return check_book_remark(facts, p);
  }
  throw std::invalid_argument("unknown theorem");
}

inline TheoremVerdict check(TheoremId id, const Graph& g, const TheoremParams& p) {
  GraphFacts facts(g);
  return check(id, facts, p);
}

// Convenience forms mirroring the individual statements.

inline TheoremVerdict check_spectral_turan(const Graph& g, std::size_t r, double tol = kDefaultTolerance) {
  TheoremParams p;
  p.r = r;
  p.tol = tol;
  return check(TheoremId::FactSTT, g, p);
}

inline TheoremVerdict check_theorem1(const Graph& g, std::size_t r, double tol = kDefaultTolerance) {
  TheoremParams p;
  p.r = r;
  p.tol = tol;
  return check(TheoremId::T1, g, p);
}

inline TheoremVerdict check_theorem2(const Graph& g, const TheoremParams& p) { return check(TheoremId::T2, g, p); }

inline TheoremVerdict check_theorem3(const Graph& g, std::size_t r, std::uint64_t budget = kDefaultBudget,
                                     std::optional<double> c = std::nullopt) {
  TheoremParams p;
  p.r = r;
  p.budget = budget;
  p.c = c;
  return check(TheoremId::T3, g, p);
}

inline TheoremVerdict check_stability(const Graph& g, const TheoremParams& p, TheoremId which) {
  GraphFacts facts(g);
  return check_stability(facts, p, which);
}

inline TheoremVerdict check_fact_lenslmm(const Graph& g, std::size_t r, double tol = kDefaultTolerance) {
  TheoremParams p;
  p.r = r;
  p.tol = tol;
  return check(TheoremId::FactLeNSMM, g, p);
}

inline TheoremVerdict check_fact_lekd(const Graph& g, std::size_t r) {
  TheoremParams p;
  p.r = r;
  return check(TheoremId::FactLeKd, g, p);
}

inline TheoremVerdict check_fact_thv4(const Graph& g, std::size_t r, std::optional<double> c,
                                      std::uint64_t budget = kDefaultBudget) {
  TheoremParams p;
  p.r = r;
  p.c = c;
  p.budget = budget;
  return check(TheoremId::FactThv4, g, p);
}

inline TheoremVerdict check_edge_implies_spectral(const Graph& g, std::size_t r, double tol = kDefaultTolerance) {
  TheoremParams p;
  p.r = r;
  p.tol = tol;
  return check(TheoremId::EdgeImpliesSpectral, g, p);
}

/// Re-checks a verdict's certificate against the graph it was computed on.
/// Returns a description of the first problem, or nullopt.
inline std::optional<std::string> validate_certificate(const Graph& g, const TheoremVerdict& v) {
  if (std::holds_alternative<std::monostate>(v.certificate)) return std::nullopt;
  if (v.conclusion != Tri::Yes) return "certificate attached to a conclusion that is not yes";
  const std::size_t r = v.r;
  if (const auto* k = std::get_if<CliqueCertificate>(&v.certificate)) {
    if (k->vertices.size() != r + 1) return "clique has the wrong order";
    for (std::size_t i = 0; i < k->vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < k->vertices.size(); ++j) {
        const Vertex a = k->vertices[i], b = k->vertices[j];
        if (a >= g.order() || b >= g.order() || a == b || !g.adjacent(a, b)) return "clique vertices not pairwise adjacent";
      }
    }
    return std::nullopt;
  }
  if (const auto* j = std::get_if<JointReport>(&v.certificate)) {
    if (!j->witness_edge) return "joint without witness edge";
    auto [a, b] = *j->witness_edge;
    if (a >= g.order() || b >= g.order() || !g.adjacent(a, b)) return "witness edge not in graph";
    std::vector<Word> common(g.words_per_row());
    bits::and_into(common, g.row(a), g.row(b));
    if (count_cliques_within(g, common, j->r - 2) != j->size) return "joint size does not match recount";
    return std::nullopt;
  }
  if (const auto* e = std::get_if<EmbeddingCertificate>(&v.certificate)) {
    return validate_embedding(g, e->target, e->embedding, true);
  }
  if (const auto* w = std::get_if<StabilityWitness>(&v.certificate)) {
    const Rational x = exact_rational(v.theorem == TheoremId::FactTstab && v.params.tstab_reading == TstabReading::UseC
                                          ? v.params.c.value_or(0.0)
                                          : v.params.b.value_or(0.0));
    const bool fact = v.theorem == TheoremId::FactTstab;
    const auto bounds = stability_bounds(g.order(), r, x, fact ? 3 : 4, fact ? 6 : 7);
    return validate_stability_witness(g, r, bounds.order, bounds.degree, *w);
  }
  if (const auto* bk = std::get_if<BookReport>(&v.certificate)) {
    if (!bk->base_clique || bk->base_clique->size() != r) return "book without an r-clique base";
    VertexSet common = VertexSet::full(g.order());
    for (std::size_t i = 0; i < r; ++i) {
      const Vertex a = (*bk->base_clique)[i];
      if (a >= g.order()) return "book base vertex out of range";
      for (std::size_t k = i + 1; k < r; ++k)
        if (!g.adjacent(a, (*bk->base_clique)[k])) return "book base is not a clique";
      common &= VertexSet::from_span(g.order(), g.row(a));
    }
    if (common.size() != bk->size) return "book size does not match common neighbourhood";
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace turanlab
