#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab {

/// Clique counts can exceed 64 bits (e.g. k_10 of a dense 4096-vertex graph).
using Count = unsigned __int128;

inline std::string to_string(Count c) {
  if (c == 0) return "0";
  std::string s;
  while (c > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(c % 10)));
    c /= 10;
  }
  return s;
}

struct CliqueCount {
  std::size_t r = 0;
  Count count = 0;
};

/// js_r(G) together with the edge attaining it.
struct JointReport {
  std::size_t r = 0;
  std::optional<Edge> witness_edge;
  Count size = 0;
  std::optional<std::vector<std::pair<Edge, Count>>> per_edge;
};

/// Largest book: max over r-cliques Q of |common neighbourhood of Q|.
struct BookReport {
  std::size_t r = 0;
  std::optional<std::vector<Vertex>> base_clique;
  std::size_t size = 0;
};

namespace detail {

class CliqueCounter {
 public:
  explicit CliqueCounter(const Graph& g, std::size_t max_depth)
      : g_(g), w_(g.words_per_row()), scratch_((max_depth + 1) * g.words_per_row()) {}

  // k-cliques inside `cand`, each counted once via increasing vertex order.
  Count count(std::span<const Word> cand, std::size_t k, std::size_t depth = 0) {
    if (k == 0) return 1;
    if (k == 1) return bits::count(cand);
    std::span<Word> next(scratch_.data() + depth * w_, w_);
    Count total = 0;
    bits::for_each(cand, [&](Vertex v) {
      bits::and_above_into(next, cand, g_.row(v), v);
      if (k == 2) {
        total += bits::count(next);
      } else if (bits::count(next) >= k - 1) {
        total += count(next, k - 1, depth + 1);
      }
    });
    return total;
  }

 private:
  const Graph& g_;
  std::size_t w_;
  std::vector<Word> scratch_;
};

}  // namespace detail

/// Number of k-cliques whose vertices all lie in `within`.
inline Count count_cliques_within(const Graph& g, std::span<const Word> within, std::size_t k) {
  detail::CliqueCounter counter(g, k);
  return counter.count(within, k);
}

/// k_r(G), exact.
inline CliqueCount count_cliques(const Graph& g, std::size_t r) {
  if (r == 0) throw std::invalid_argument("count_cliques: r must be >= 1");
  if (r > g.order()) return {r, 0};
  if (r == 2) return {r, g.edge_count()};
  const VertexSet all = VertexSet::full(g.order());
  return {r, count_cliques_within(g, all.words(), r)};
}

/// The lexicographically least r-clique, if any.
inline std::optional<std::vector<Vertex>> clique_exists(const Graph& g, std::size_t r) {
  if (r == 0) throw std::invalid_argument("clique_exists: r must be >= 1");
  if (r > g.order()) return std::nullopt;
  const std::size_t w = g.words_per_row();
  std::vector<Word> scratch((r + 1) * w);
  std::vector<Vertex> clique;
  clique.reserve(r);

  auto search = [&](auto&& self, std::span<const Word> cand, std::size_t depth) -> bool {
    if (clique.size() == r) return true;
    const std::size_t need = r - clique.size();
    if (bits::count(cand) < need) return false;
    std::span<Word> next(scratch.data() + (depth + 1) * w, w);
    for (std::size_t v = bits::next(cand, 0); v < g.order(); v = bits::next(cand, v + 1)) {
      clique.push_back(static_cast<Vertex>(v));
      bits::and_above_into(next, cand, g.row(static_cast<Vertex>(v)), v);
      if (self(self, next, depth + 1)) return true;
      clique.pop_back();
    }
    return false;
  };

  std::span<Word> root(scratch.data(), w);
  for (Vertex v = 0; v < g.order(); ++v) bits::set(root, v);
  if (search(search, root, 0)) return clique;
  return std::nullopt;
}

/// js_r(G): for every edge uv, the number of (r-2)-cliques in N(u) & N(v);
/// report the maximum, ties to the lexicographically least edge.
inline JointReport joint_size(const Graph& g, std::size_t r, bool with_per_edge = false) {
  if (r < 2) throw std::invalid_argument("joint_size: r must be >= 2");
  JointReport rep;
  rep.r = r;
  if (with_per_edge) rep.per_edge.emplace();
  detail::CliqueCounter counter(g, r);
  VertexSet common(g.order());
  for (auto [u, v] : g.edges()) {
    bits::and_into(common.words(), g.row(u), g.row(v));
    const Count c = counter.count(common.words(), r - 2);
    if (rep.per_edge) rep.per_edge->push_back({{u, v}, c});
    if (!rep.witness_edge || c > rep.size) {
      rep.size = c;
      rep.witness_edge = Edge{u, v};
    }
  }
  if (rep.witness_edge && rep.size == 0) rep.witness_edge.reset();
  return rep;
}

/// Largest book with an r-clique spine; witness is the lexicographically
/// least maximising spine.
inline BookReport book_size(const Graph& g, std::size_t r) {
  if (r == 0) throw std::invalid_argument("book_size: r must be >= 1");
  BookReport rep;
  rep.r = r;
  if (r > g.order()) return rep;
  const std::size_t w = g.words_per_row();
  std::vector<Word> scratch((r + 1) * w);
  std::vector<Vertex> clique;
  bool found = false;

  // `common` is the common neighbourhood of the current clique (all vertices
  // when the clique is empty); extensions come from common & (> last).
  auto search = [&](auto&& self, std::span<const Word> common, std::size_t depth, std::size_t after) -> void {
    if (clique.size() == r) {
      const std::size_t s = bits::count(common);
      if (!found || s > rep.size) {
        found = true;
        rep.size = s;
        rep.base_clique = clique;
      }
      return;
    }
    std::span<Word> next(scratch.data() + (depth + 1) * w, w);
    for (std::size_t v = bits::next(common, after); v < g.order(); v = bits::next(common, v + 1)) {
      bits::and_into(next, common, g.row(static_cast<Vertex>(v)));
      // The final spine's common neighbourhood is a subset of `next`.
      if (found && bits::count(next) <= rep.size) continue;
      clique.push_back(static_cast<Vertex>(v));
      self(self, std::span<const Word>(next), depth + 1, v + 1);
      clique.pop_back();
    }
  };

  std::span<Word> root(scratch.data(), w);
  for (Vertex v = 0; v < g.order(); ++v) bits::set(root, v);
  search(search, root, 0, 0);
  return rep;
}

}  // namespace turanlab
