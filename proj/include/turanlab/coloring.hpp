#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab {

inline constexpr std::uint64_t kDefaultColoringCap = 10'000'000;

enum class ColoringStatus { Colorable, NotColorable, CapExhausted };

struct ColoringOutcome {
  ColoringStatus status = ColoringStatus::NotColorable;
  std::vector<int> coloring;  // part index per vertex, when Colorable
  std::uint64_t nodes = 0;
};

inline bool is_proper_coloring(const Graph& g, std::span<const int> coloring, std::size_t r) {
  if (coloring.size() != g.order()) return false;
  for (int c : coloring) {
    if (c < 0 || static_cast<std::size_t>(c) >= r) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (coloring[u] == coloring[v]) return false;
  }
  return true;
}

namespace detail {

inline ColoringOutcome bipartition(const Graph& g) {
  ColoringOutcome out;
  std::vector<int> color(g.order(), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      ++out.nodes;
      bool clash = false;
      bits::for_each(g.row(v), [&](Vertex w) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          clash = true;
        }
      });
      if (clash) return out;
    }
  }
  out.status = ColoringStatus::Colorable;
  out.coloring = std::move(color);
  return out;
}

// DSatur-ordered exact backtracking. Colours are introduced in order, so a
// fresh vertex may only take the lowest unused colour.
class DsaturColoring {
 public:
  DsaturColoring(const Graph& g, std::size_t r, std::uint64_t cap)
      : g_(g), r_(r), cap_(cap), color_(g.order(), -1), nbr_count_(g.order() * r, 0), sat_(g.order(), 0),
        degree_(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) degree_[v] = g.degree(v);
  }

  ColoringOutcome run() {
    ColoringOutcome out;
    const bool ok = solve(0, 0);
    out.nodes = nodes_;
    if (capped_) {
      out.status = ColoringStatus::CapExhausted;
    } else if (ok) {
      out.status = ColoringStatus::Colorable;
      out.coloring = color_;
    }
    return out;
  }

 private:
  bool solve(std::size_t colored, int used) {
    if (colored == g_.order()) return true;
    // Most saturated uncoloured vertex; ties by degree, then index.
    Vertex best = 0;
    int best_sat = -1;
    std::size_t best_deg = 0;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (color_[v] >= 0) continue;
      if (sat_[v] > best_sat || (sat_[v] == best_sat && degree_[v] > best_deg)) {
        best = v;
        best_sat = sat_[v];
        best_deg = degree_[v];
      }
    }
    if (static_cast<std::size_t>(best_sat) >= r_) return false;
    const int limit = std::min(static_cast<int>(r_), used + 1);
    for (int c = 0; c < limit; ++c) {
      if (nbr_count_[best * r_ + c] != 0) continue;
      if (++nodes_ > cap_) {
        capped_ = true;
        return false;
      }
      assign(best, c, +1);
      if (solve(colored + 1, std::max(used, c + 1))) return true;
      assign(best, c, -1);
      if (capped_) return false;
    }
    return false;
  }

  void assign(Vertex v, int c, int delta) {
    color_[v] = delta > 0 ? c : -1;
    bits::for_each(g_.row(v), [&](Vertex w) {
      int& cnt = nbr_count_[w * r_ + c];
      if (delta > 0 && cnt++ == 0) ++sat_[w];
      if (delta < 0 && --cnt == 0) --sat_[w];
    });
  }

  const Graph& g_;
  std::size_t r_;
  std::uint64_t cap_;
  std::vector<int> color_;
  std::vector<int> nbr_count_;
  std::vector<int> sat_;
  std::vector<std::size_t> degree_;
  std::uint64_t nodes_ = 0;
  bool capped_ = false;
};

}  // namespace detail

/// Exact r-colourability: BFS for r = 2, DSatur backtracking for r >= 3
/// with a node cap whose exhaustion is reported separately.
inline ColoringOutcome is_r_partite(const Graph& g, std::size_t r, std::uint64_t cap = kDefaultColoringCap) {
  if (r == 0) throw std::invalid_argument("is_r_partite: r must be >= 1");
  if (r == 1) {
    ColoringOutcome out;
    if (g.edge_count() == 0) {
      out.status = ColoringStatus::Colorable;
      out.coloring.assign(g.order(), 0);
    }
    return out;
  }
  if (r == 2) return detail::bipartition(g);
  return detail::DsaturColoring(g, r, cap).run();
}

}  // namespace turanlab
