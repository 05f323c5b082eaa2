#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "turanlab/cliques.hpp"
#include "turanlab/embedding.hpp"
#include "turanlab/exact.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/spectral.hpp"
#include "turanlab/stability.hpp"
#include "turanlab/theorems.hpp"

// JSON forms of library results. Exact quantities are written as rational
// strings ("p/q" or "p"); counts are numbers when they fit in 64 bits and
// decimal strings otherwise.

namespace turanlab {

using Json = nlohmann::ordered_json;

inline Json count_json(Count c) {
  if (c <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(c);
  return to_string(c);
}

inline Json edge_json(const Edge& e) { return Json::array({e.first, e.second}); }

inline Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(edge_json(e));
  return {{"n", g.order()}, {"m", g.edge_count()}, {"edges", std::move(edges)}};
}

inline const char* to_string(SpectralVerdict v) {
  switch (v) {
    case SpectralVerdict::GreaterCertified: return "greater";
    case SpectralVerdict::NotGreaterCertified: return "not-greater";
    case SpectralVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

inline const char* to_string(Resolution r) {
  switch (r) {
    case Resolution::Numeric: return "numeric";
    case Resolution::Refined: return "refined";
    case Resolution::Exact: return "exact";
    case Resolution::Unresolved: return "unresolved";
  }
  return "?";
}

inline Json to_json(const SpectralEstimate& e) {
  return {{"value", e.value},
          {"residual", e.residual},
          {"rounding", e.rounding},
          {"lower", e.lower()},
          {"upper", e.upper()},
          {"iterations", e.iterations},
          {"converged", e.converged}};
}

inline Json to_json(const SpectralComparison& c) {
  return {{"mu", to_json(c.mu_g)},
          {"threshold", c.threshold},
          {"solver_tol", c.solver_tol},
          {"verdict", to_string(c.verdict)},
          {"initial_verdict", to_string(c.initial_verdict)},
          {"resolved_by", to_string(c.resolved_by)}};
}

inline Json to_json(const CliqueCount& c) { return {{"r", c.r}, {"count", count_json(c.count)}}; }

inline Json to_json(const JointReport& j) {
  Json out = {{"r", j.r},
              {"witness_edge", j.witness_edge ? edge_json(*j.witness_edge) : Json()},
              {"size", count_json(j.size)}};
  if (j.per_edge) {
    Json per = Json::array();
    for (const auto& [e, c] : *j.per_edge) per.push_back({{"edge", edge_json(e)}, {"count", count_json(c)}});
    out["per_edge"] = std::move(per);
  }
  return out;
}

inline Json to_json(const BookReport& b) {
  return {{"r", b.r}, {"base_clique", b.base_clique ? Json(*b.base_clique) : Json()}, {"size", b.size}};
}

inline Json to_json(const Embedding& e) {
  return {{"parts", e.parts}, {"extra_edge", e.extra_edge ? edge_json(*e.extra_edge) : Json()}};
}

inline Json to_json(const StabilityWitness& w) { return {{"subset", w.subset}, {"coloring", w.coloring}}; }

inline Json certificate_json(const Certificate& c) {
  struct Visitor {
    Json operator()(std::monostate) const { return nullptr; }
    Json operator()(const CliqueCertificate& k) const { return {{"kind", "clique"}, {"vertices", k.vertices}}; }
    Json operator()(const JointReport& j) const {
      Json out = {{"kind", "joint"}};
      out.update(to_json(j));
      return out;
    }
    Json operator()(const EmbeddingCertificate& e) const {
      Json out = {{"kind", "embedding"}, {"target", e.target.sizes()}};
      out.update(to_json(e.embedding));
      return out;
    }
    Json operator()(const StabilityWitness& w) const {
      Json out = {{"kind", "stability"}};
      out.update(to_json(w));
      return out;
    }
    Json operator()(const BookReport& b) const {
      Json out = {{"kind", "book"}};
      out.update(to_json(b));
      return out;
    }
  };
  return std::visit(Visitor{}, c);
}

inline Json optional_rational(const std::optional<Rational>& q) { return q ? Json(to_string(*q)) : Json(); }

inline Json params_json(const TheoremParams& p) {
  return {{"r", p.r},
          {"c", p.c ? Json(*p.c) : Json()},
          {"b", p.b ? Json(*p.b) : Json()},
          {"tol", p.tol},
          {"budget", p.budget},
          {"coloring_cap", p.coloring_cap},
          {"tstab_reading", p.tstab_reading == TstabReading::UseB ? "b" : "c"}};
}

inline Json to_json(const InequalityRecord& rec) {
  return {{"name", rec.name},
          {"relation", rec.relation},
          {"lhs", to_string(rec.lhs)},
          {"lhs_radius", to_string(rec.lhs_radius)},
          {"rhs", to_string(rec.rhs)},
          {"holds", to_string(rec.holds)}};
}

/// Full verdict. The graph is embedded only for counterexamples, or when
/// `with_graph` is set.
inline Json to_json(const TheoremVerdict& v, const Graph* g = nullptr, bool with_graph = false) {
  Json ineq = Json::array();
  for (const auto& rec : v.inequalities) ineq.push_back(to_json(rec));
  Json out = {{"theorem", theorem_name(v.theorem)},
              {"n", v.n},
              {"r", v.r},
              {"params", params_json(v.params)},
              {"hypothesis", to_string(v.hypothesis)},
              {"conclusion", to_string(v.conclusion)},
              {"in_regime", v.in_regime},
              {"vacuous", v.vacuous},
              {"counterexample", v.is_counterexample()},
              {"branch", v.branch ? Json(std::string(1, *v.branch)) : Json()},
              {"witness_status", v.witness_status ? Json(to_string(*v.witness_status)) : Json()},
              {"target", v.target ? Json(v.target->sizes()) : Json()},
              {"certificate", certificate_json(v.certificate)},
              {"lhs", optional_rational(v.lhs)},
              {"rhs", optional_rational(v.rhs)},
              {"inequalities", std::move(ineq)},
              {"spectral", v.spectral ? to_json(*v.spectral) : Json()},
              {"note", v.note}};
  if (g && (with_graph || v.is_counterexample())) out["graph"] = graph_json(*g);
  return out;
}

}  // namespace turanlab
