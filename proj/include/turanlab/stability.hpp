#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "turanlab/bounds.hpp"
#include "turanlab/coloring.hpp"
#include "turanlab/graph.hpp"

namespace turanlab {

enum class WitnessStatus {
  Found,
  NotFound,      // greedy peeling failed; says nothing about existence
  Refuted,       // exhaustive subset search proved no witness exists
  CapExhausted,  // the exact colouring hit its node cap
};

/// Induced r-partite subgraph G_0 with |G_0| and delta(G_0) above the
/// stability thresholds. `subset` is sorted; `coloring[i]` is the part of subset[i].
struct StabilityWitness {
  std::vector<Vertex> subset;
  std::vector<int> coloring;
};

struct WitnessOutcome {
  WitnessStatus status = WitnessStatus::NotFound;
  std::optional<StabilityWitness> witness;
};

/// Orders up to this are eligible for the exhaustive refutation pass.
inline constexpr std::size_t kExhaustiveWitnessMaxOrder = 16;

/// Independent re-check of a stability witness.
inline std::optional<std::string> validate_stability_witness(const Graph& g, std::size_t r,
                                                             const CubeRootBound& order_bound,
                                                             const CubeRootBound& degree_bound,
                                                             const StabilityWitness& w) {
  if (w.subset.empty()) return "empty subgraph";
  if (w.coloring.size() != w.subset.size()) return "colouring size mismatch";
  if (!std::is_sorted(w.subset.begin(), w.subset.end()) ||
      std::adjacent_find(w.subset.begin(), w.subset.end()) != w.subset.end()) {
    return "subset not strictly increasing";
  }
  const Graph h = induced_subgraph(g, w.subset);
  if (!is_proper_coloring(h, w.coloring, r)) return "colouring is not a proper r-colouring";
  if (!order_bound.met_by(Rational(static_cast<long long>(h.order())))) return "order below threshold";
  if (!degree_bound.exceeded_by(Rational(static_cast<long long>(h.min_degree())))) {
    return "minimum degree not above threshold";
  }
  return std::nullopt;
}

namespace detail {

// Colour greedily with r colours, each vertex (by descending degree) taking
// the colour shared with the fewest already-coloured neighbours, and return
// the number of monochromatic edges at each vertex.
inline std::vector<std::size_t> greedy_conflicts(const Graph& h, std::size_t r) {
  const std::size_t n = h.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
  std::vector<int> color(n, -1);
  std::vector<std::size_t> tally(r);
  for (Vertex v : order) {
    std::fill(tally.begin(), tally.end(), 0);
    bits::for_each(h.row(v), [&](Vertex w) {
      if (color[w] >= 0) ++tally[static_cast<std::size_t>(color[w])];
    });
    color[v] = static_cast<int>(std::min_element(tally.begin(), tally.end()) - tally.begin());
  }
  std::vector<std::size_t> conflicts(n, 0);
  for (auto [a, b] : h.edges()) {
    if (color[a] == color[b]) {
      ++conflicts[a];
      ++conflicts[b];
    }
  }
  return conflicts;
}

inline std::optional<StabilityWitness> make_witness(const Graph& g, std::vector<Vertex> alive, std::size_t r,
                                                    std::uint64_t cap) {
  const Graph h = induced_subgraph(g, alive);
  auto col = is_r_partite(h, r, cap);
  if (col.status != ColoringStatus::Colorable) return std::nullopt;
  return StabilityWitness{std::move(alive), std::move(col.coloring)};
}

inline WitnessOutcome exhaustive_witness(const Graph& g, std::size_t r, const CubeRootBound& order_bound,
                                         const CubeRootBound& degree_bound, std::uint64_t cap) {
  const std::size_t n = g.order();
  WitnessOutcome out;
  // Largest subsets first so the witness, if any, is as large as possible.
  for (std::size_t m = n; m >= 1; --m) {
    if (!order_bound.met_by(Rational(static_cast<long long>(m)))) break;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(m), true);
    do {
      std::vector<Vertex> subset;
      for (Vertex v = 0; v < n; ++v)
        if (pick[v]) subset.push_back(v);
      const Graph h = induced_subgraph(g, subset);
      if (!degree_bound.exceeded_by(Rational(static_cast<long long>(h.min_degree())))) continue;
      auto col = is_r_partite(h, r, cap);
      if (col.status == ColoringStatus::CapExhausted) {
        out.status = WitnessStatus::CapExhausted;
        return out;
      }
      if (col.status == ColoringStatus::Colorable) {
        out.status = WitnessStatus::Found;
        out.witness = StabilityWitness{std::move(subset), std::move(col.coloring)};
        return out;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  out.status = WitnessStatus::Refuted;
  return out;
}

}  // namespace detail

/// Greedy peeling search for the stability structure:
///   1. while the current induced subgraph is not r-partite, delete the
///      vertex with the most monochromatic edges under a greedy r-colouring
///      (ties to the lowest index);
///   2. delete, to a fixpoint, every vertex whose degree inside the current
///      subgraph is not above `degree_bound`;
///   3. succeed if the survivors are non-empty and meet `order_bound`.
/// Degrees are measured inside G_0 and compared against bounds scaled by the
/// order of the whole graph. Failure is reported as NotFound, never as a
/// refutation; see search_stability_witness for that.
inline WitnessOutcome find_stability_witness(const Graph& g, std::size_t r, const CubeRootBound& order_bound,
                                             const CubeRootBound& degree_bound,
                                             std::uint64_t cap = kDefaultColoringCap) {
  WitnessOutcome out;
  std::vector<Vertex> alive(g.order());
  std::iota(alive.begin(), alive.end(), Vertex{0});
  auto fallback = [&]() { return out; };

  while (true) {
    if (alive.empty() || !order_bound.met_by(Rational(static_cast<long long>(alive.size())))) return fallback();
    const Graph h = induced_subgraph(g, alive);
    const auto col = is_r_partite(h, r, cap);
    if (col.status == ColoringStatus::CapExhausted) {
      out.status = WitnessStatus::CapExhausted;
      return out;
    }
    if (col.status == ColoringStatus::Colorable) break;
    const auto conflicts = detail::greedy_conflicts(h, r);
    std::size_t worst = 0;
    for (std::size_t i = 1; i < conflicts.size(); ++i) {
      if (conflicts[i] > conflicts[worst]) worst = i;
    }
    if (conflicts[worst] == 0) {
      // Greedy found no clash but the exact test says not r-partite cannot
      // both hold; drop a maximum-degree vertex to guarantee progress.
      for (std::size_t i = 1; i < alive.size(); ++i)
        if (h.degree(static_cast<Vertex>(i)) > h.degree(static_cast<Vertex>(worst))) worst = i;
    }
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(worst));
  }

  while (!alive.empty()) {
    const Graph h = induced_subgraph(g, alive);
    std::vector<Vertex> keep;
    for (std::size_t i = 0; i < alive.size(); ++i) {
      if (degree_bound.exceeded_by(Rational(static_cast<long long>(h.degree(static_cast<Vertex>(i)))))) {
        keep.push_back(alive[i]);
      }
    }
    if (keep.size() == alive.size()) break;
    alive = std::move(keep);
  }
  if (alive.empty() || !order_bound.met_by(Rational(static_cast<long long>(alive.size())))) return fallback();
  out.witness = detail::make_witness(g, std::move(alive), r, cap);
  out.status = out.witness ? WitnessStatus::Found : WitnessStatus::CapExhausted;
  return out;
}

/// Exhaustive search over all vertex subsets, largest first. Returns Found or
/// Refuted (or CapExhausted); refuses graphs above kExhaustiveWitnessMaxOrder.
inline WitnessOutcome search_stability_witness(const Graph& g, std::size_t r, const CubeRootBound& order_bound,
                                               const CubeRootBound& degree_bound,
                                               std::uint64_t cap = kDefaultColoringCap) {
  if (g.order() > kExhaustiveWitnessMaxOrder) {
    throw std::invalid_argument("search_stability_witness: graph too large for exhaustive search");
  }
  return detail::exhaustive_witness(g, r, order_bound, degree_bound, cap);
}

inline const char* to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::Found: return "found";
    case WitnessStatus::NotFound: return "not-found";
    case WitnessStatus::Refuted: return "refuted";
    case WitnessStatus::CapExhausted: return "cap-exhausted";
  }
  return "?";
}

}  // namespace turanlab
