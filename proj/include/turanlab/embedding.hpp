#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class SearchStatus { Found, Absent, BudgetExhausted };

/// Placement of K_r(s_1..s_r) (and optionally the K_r^+ extra edge) in a host.
struct Embedding {
  std::vector<std::vector<Vertex>> parts;
  std::optional<Edge> extra_edge;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Absent;
  std::optional<Embedding> embedding;
  std::uint64_t expansions = 0;
};

/// Independent check of an embedding against its host; returns a
/// description of the first violated condition, or nullopt when valid.
inline std::optional<std::string> validate_embedding(const Graph& g, const PartSpec& spec, const Embedding& e,
                                                     bool require_extra_edge) {
  if (e.parts.size() != spec.parts()) return "wrong number of parts";
  std::vector<int> part_of(g.order(), -1);
  for (std::size_t p = 0; p < e.parts.size(); ++p) {
    if (e.parts[p].size() != spec[p]) return "part " + std::to_string(p) + " has the wrong size";
    for (Vertex v : e.parts[p]) {
      if (v >= g.order()) return "vertex out of range";
      if (part_of[v] >= 0) return "vertex " + std::to_string(v) + " used twice";
      part_of[v] = static_cast<int>(p);
    }
  }
  for (std::size_t p = 0; p < e.parts.size(); ++p) {
    for (std::size_t q = p + 1; q < e.parts.size(); ++q) {
      for (Vertex a : e.parts[p]) {
        for (Vertex b : e.parts[q]) {
          if (!g.adjacent(a, b)) {
            return "missing cross edge " + std::to_string(a) + "-" + std::to_string(b);
          }
        }
      }
    }
  }
  if (require_extra_edge && !e.extra_edge) return "missing extra edge";
  if (e.extra_edge) {
    auto [a, b] = *e.extra_edge;
    if (a >= g.order() || b >= g.order() || part_of[a] != 0 || part_of[b] != 0) {
      return "extra edge not inside part 1";
    }
    if (a == b || !g.adjacent(a, b)) return "extra edge is not a host edge";
  }
  return std::nullopt;
}

namespace detail {

// Backtracking over part assignments. Parts are filled in decreasing size
// order; a vertex may join part p only if it is adjacent to every vertex
// already placed in the other parts. Within a part, vertices are taken in
// increasing rank (rank = position in the descending-degree order), and
// consecutive equal-size parts without pre-placed vertices are ordered by
// their first vertex, so each embedding is visited once.
class MultipartiteSearch {
 public:
  MultipartiteSearch(const Graph& g, const PartSpec& spec, std::uint64_t budget)
      : g_(g), spec_(spec), budget_(budget), w_(g.words_per_row()), r_(spec.parts()) {
    order_.resize(g.order());
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::vector<std::size_t> deg(g.order());
    for (Vertex v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
    rank_.resize(g.order());
    for (std::size_t i = 0; i < order_.size(); ++i) rank_[order_[i]] = i;
    fill_order_.resize(r_);
    std::iota(fill_order_.begin(), fill_order_.end(), std::size_t{0});
    std::stable_sort(fill_order_.begin(), fill_order_.end(),
                     [&](std::size_t a, std::size_t b) { return spec_[a] > spec_[b]; });
  }

  std::uint64_t expansions() const { return expansions_; }

  /// Runs one search. `prefill[p]` vertices are forced into part p.
  SearchStatus run(const std::vector<std::vector<Vertex>>& prefill, Embedding& out) {
    parts_.assign(r_, {});
    used_ = VertexSet(g_.order());
    const std::size_t total = spec_.total();
    // cross_[d * r + p]: vertices adjacent to everything placed outside part p.
    cross_.assign((total + 1) * r_ * w_, 0);
    for (std::size_t p = 0; p < r_; ++p) {
      auto c = cross(0, p);
      for (Vertex v = 0; v < g_.order(); ++v) bits::set(c, v);
    }
    std::size_t depth = 0;
    prefilled_.assign(r_, 0);
    for (std::size_t p = 0; p < r_; ++p) {
      prefilled_[p] = prefill[p].size();
      if (prefilled_[p] > spec_[p]) return SearchStatus::Absent;
      for (Vertex v : prefill[p]) {
        if (!bits::test(cross(depth, p), v) || used_.contains(v)) return SearchStatus::Absent;
        place(depth, p, v);
        ++depth;
      }
    }
    symmetric_.assign(r_, false);
    for (std::size_t i = 1; i < r_; ++i) {
      const std::size_t a = fill_order_[i - 1], b = fill_order_[i];
      symmetric_[i] = spec_[a] == spec_[b] && prefill[a].empty() && prefill[b].empty();
    }
    if (!feasible(depth)) return SearchStatus::Absent;
    exhausted_ = false;
    const bool ok = extend(depth, 0);
    if (exhausted_) return SearchStatus::BudgetExhausted;
    if (!ok) return SearchStatus::Absent;
    out.parts = parts_;
    for (auto& part : out.parts) std::sort(part.begin(), part.end());
    return SearchStatus::Found;
  }

 private:
  std::span<Word> cross(std::size_t depth, std::size_t p) {
    return {cross_.data() + (depth * r_ + p) * w_, w_};
  }

  void place(std::size_t depth, std::size_t p, Vertex v) {
    for (std::size_t q = 0; q < r_; ++q) {
      auto dst = cross(depth + 1, q);
      auto src = cross(depth, q);
      if (q == p) {
        std::copy(src.begin(), src.end(), dst.begin());
      } else {
        bits::and_into(dst, src, g_.row(v));
      }
    }
    parts_[p].push_back(v);
    used_.insert(v);
  }

  void unplace(std::size_t p, Vertex v) {
    parts_[p].pop_back();
    used_.erase(v);
  }

  bool feasible(std::size_t depth) {
    for (std::size_t p = 0; p < r_; ++p) {
      const std::size_t need = spec_[p] - parts_[p].size();
      if (need == 0) continue;
      std::size_t avail = 0;
      auto c = cross(depth, p);
      for (std::size_t i = 0; i < w_; ++i) avail += static_cast<std::size_t>(std::popcount(c[i] & ~used_.words()[i]));
      if (avail < need) return false;
    }
    return true;
  }

  bool extend(std::size_t depth, std::size_t slot) {
    while (slot < r_ && parts_[fill_order_[slot]].size() == spec_[fill_order_[slot]]) ++slot;
    if (slot == r_) return true;
    const std::size_t p = fill_order_[slot];
    std::size_t start_rank = 0;
    if (parts_[p].size() > prefilled_[p]) {
      start_rank = rank_[parts_[p].back()] + 1;
    } else if (symmetric_[slot] && prefilled_[p] == 0) {
      start_rank = rank_[parts_[fill_order_[slot - 1]].front()] + 1;
    }
    const auto pool = cross(depth, p);
    for (std::size_t i = start_rank; i < order_.size(); ++i) {
      const Vertex v = order_[i];
      if (!bits::test(pool, v) || used_.contains(v)) continue;
      if (++expansions_ > budget_) {
        exhausted_ = true;
        return false;
      }
      place(depth, p, v);
      if (feasible(depth + 1) && extend(depth + 1, slot)) return true;
      unplace(p, v);
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  const PartSpec& spec_;
  std::uint64_t budget_;
  std::size_t w_;
  std::size_t r_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> fill_order_;
  std::vector<bool> symmetric_;
  std::vector<std::size_t> prefilled_;
  std::vector<std::vector<Vertex>> parts_;
  VertexSet used_;
  std::vector<Word> cross_;
  std::uint64_t expansions_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

/// Exact search for K_r(s_1..s_r) as a (not necessarily induced) subgraph.
inline SearchOutcome find_complete_multipartite(const Graph& g, const PartSpec& spec,
                                                std::uint64_t budget = kDefaultBudget) {
  SearchOutcome out;
  if (spec.total() > g.order()) return out;
  detail::MultipartiteSearch search(g, spec, budget);
  Embedding e;
  out.status = search.run(std::vector<std::vector<Vertex>>(spec.parts()), e);
  out.expansions = search.expansions();
  if (out.status == SearchStatus::Found) out.embedding = std::move(e);
  return out;
}

/// Exact search for K_r^+(s_1..s_r): try each host edge uv as the extra edge,
/// in descending order of |N(u) & N(v)| (ties lexicographic), with u and v
/// forced into part 1. The budget is shared across all attempts.
inline SearchOutcome find_kr_plus(const Graph& g, const PartSpec& spec, std::uint64_t budget = kDefaultBudget) {
  spec.require_plus_shape();
  SearchOutcome out;
  if (spec.total() > g.order()) return out;
  auto edges = g.edges();
  std::vector<std::size_t> common(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    common[i] = bits::count_and(g.row(edges[i].first), g.row(edges[i].second));
  }
  std::vector<std::size_t> idx(edges.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return common[a] > common[b]; });

  const std::size_t others = spec.total() - spec[0];
  detail::MultipartiteSearch search(g, spec, budget);
  std::vector<std::vector<Vertex>> prefill(spec.parts());
  for (std::size_t i : idx) {
    if (common[i] < others) break;
    auto [u, v] = edges[i];
    prefill[0] = {u, v};
    Embedding e;
    const SearchStatus st = search.run(prefill, e);
    if (st == SearchStatus::Found) {
      e.extra_edge = Edge{u, v};
      out.status = SearchStatus::Found;
      out.embedding = std::move(e);
      break;
    }
    if (st == SearchStatus::BudgetExhausted) {
      out.status = SearchStatus::BudgetExhausted;
      break;
    }
  }
  out.expansions = search.expansions();
  return out;
}

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "FOUND";
    case SearchStatus::Absent: return "ABSENT";
    case SearchStatus::BudgetExhausted: return "BUDGET";
  }
  return "?";
}

}  // namespace turanlab
