#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "turanlab/rng.hpp"
#include "turanlab/vertex_set.hpp"

namespace turanlab {

using Edge = std::pair<Vertex, Vertex>;

/// Dense undirected simple graph with one adjacency bitset row per vertex.
///
/// add_edge/remove_edge exist for the construction phase; once a graph is
/// handed to the statistics, finders or checkers it is treated as a value.
/// Rows are stored contiguously so a row is a span of `words_per_row()` words.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), stride_(words_for(n)), adj_(n * words_for(n), 0) {}

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return m_; }
  std::size_t words_per_row() const { return stride_; }

  std::span<const Word> row(Vertex v) const { return {adj_.data() + v * stride_, stride_}; }

  bool adjacent(Vertex u, Vertex v) const { return bits::test(row(u), v); }

  std::size_t degree(Vertex v) const { return bits::count(row(v)); }

  std::size_t min_degree() const {
    if (n_ == 0) return 0;
    std::size_t d = n_;
    for (Vertex v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  /// Returns true if the edge was new.
  bool add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    if (adjacent(u, v)) return false;
    bits::set(mutable_row(u), v);
    bits::set(mutable_row(v), u);
    ++m_;
    return true;
  }

  bool remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    if (!adjacent(u, v)) return false;
    bits::reset(mutable_row(u), v);
    bits::reset(mutable_row(v), u);
    --m_;
    return true;
  }

  Graph with_edge(Vertex u, Vertex v) const {
    Graph g = *this;
    g.add_edge(u, v);
    return g;
  }

  Graph without_edge(Vertex u, Vertex v) const {
    Graph g = *this;
    g.remove_edge(u, v);
    return g;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
      for (std::size_t v = bits::next(row(u), u + 1); v < n_; v = bits::next(row(u), v + 1)) {
        out.emplace_back(u, static_cast<Vertex>(v));
      }
    }
    return out;
  }

  VertexSet neighbours(Vertex v) const { return VertexSet::from_span(n_, row(v)); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  std::span<Word> mutable_row(Vertex v) { return {adj_.data() + v * stride_, stride_}; }

  void check_pair(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) throw std::out_of_range("vertex index out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
  }

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::size_t m_ = 0;
  std::vector<Word> adj_;
};

/// Ordered part sizes (s_1, ..., s_r) of a complete multipartite graph.
class PartSpec {
 public:
  PartSpec() = default;
  explicit PartSpec(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw std::invalid_argument("part spec needs at least one part");
    for (std::size_t s : sizes_) {
      if (s == 0) throw std::invalid_argument("part sizes must be positive");
    }
  }
  PartSpec(std::initializer_list<std::size_t> sizes) : PartSpec(std::vector<std::size_t>(sizes)) {}

  std::size_t parts() const { return sizes_.size(); }
  std::size_t total() const { return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0}); }
  std::size_t operator[](std::size_t i) const { return sizes_[i]; }
  const std::vector<std::size_t>& sizes() const { return sizes_; }

  void require_plus_shape() const {
    if (sizes_.front() < 2) throw std::invalid_argument("K_r^+ needs a first part of size >= 2");
  }

  friend bool operator==(const PartSpec&, const PartSpec&) = default;

 private:
  std::vector<std::size_t> sizes_;
};

/// Turán part sizes: n mod r parts of size ceil(n/r) first, then floor(n/r).
/// Parts may be empty when n < r.
inline std::vector<std::size_t> turan_part_sizes(std::size_t n, std::size_t r) {
  if (r == 0) throw std::invalid_argument("Turán graph needs r >= 1");
  std::vector<std::size_t> sizes(r, n / r);
  for (std::size_t i = 0; i < n % r; ++i) ++sizes[i];
  return sizes;
}

/// e(K(s_1..s_r)) = sum_{i<j} s_i s_j, as (total^2 - sum s_i^2) / 2.
inline std::uint64_t multipartite_edge_count(std::span<const std::size_t> sizes) {
  std::uint64_t total = 0, squares = 0;
  for (std::size_t s : sizes) {
    total += s;
    squares += static_cast<std::uint64_t>(s) * s;
  }
  return (total * total - squares) / 2;
}

inline std::uint64_t turan_edge_count(std::size_t n, std::size_t r) {
  const auto sizes = turan_part_sizes(n, r);
  return multipartite_edge_count(sizes);
}

namespace detail {

inline Graph multipartite_from_sizes(std::span<const std::size_t> sizes) {
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  std::vector<std::size_t> part_of(n);
  std::size_t v = 0;
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    for (std::size_t k = 0; k < sizes[p]; ++k) part_of[v++] = p;
  }
  Graph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (part_of[a] != part_of[b]) g.add_edge(a, b);
    }
  }
  return g;
}

}  // namespace detail

inline Graph make_turan(std::size_t n, std::size_t r) {
  const auto sizes = turan_part_sizes(n, r);
  return detail::multipartite_from_sizes(sizes);
}

inline Graph make_complete_multipartite(const PartSpec& spec) {
  return detail::multipartite_from_sizes(spec.sizes());
}

/// K_r^+(s_1..s_r): the extra edge joins the two lowest vertices of part 1.
inline Graph make_kr_plus(const PartSpec& spec) {
  spec.require_plus_shape();
  Graph g = make_complete_multipartite(spec);
  g.add_edge(0, 1);
  return g;
}

inline Graph make_complete(std::size_t n) {
  Graph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

inline Graph make_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

inline Graph make_star(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

/// Book: an r-clique on vertices 0..r-1 plus n-r pages, each joined to the whole clique.
inline Graph make_book(std::size_t n, std::size_t r) {
  if (r > n) throw std::invalid_argument("book spine larger than the graph");
  Graph g(n);
  for (Vertex a = 0; a < r; ++a) {
    for (Vertex b = a + 1; b < r; ++b) g.add_edge(a, b);
    for (Vertex p = static_cast<Vertex>(r); p < n; ++p) g.add_edge(a, p);
  }
  return g;
}

/// Index of pair (u, v), u < v, in the lexicographic list of all pairs of [n].
inline std::uint64_t pair_index(std::size_t n, Vertex u, Vertex v) {
  const std::uint64_t uu = u;
  return uu * (2 * n - uu - 1) / 2 + (v - u - 1);
}

/// Inverse of pair_index.
inline Edge pair_from_index(std::size_t n, std::uint64_t k) {
  Vertex u = 0;
  std::uint64_t row_len = n - 1;
  while (k >= row_len) {
    k -= row_len;
    ++u;
    --row_len;
  }
  return {u, static_cast<Vertex>(u + 1 + k)};
}

/// Uniform G(n, m): Floyd's subset sampling over the lexicographic pair
/// indices, drawing from SplitMix64(seed) with Lemire bounded integers.
/// For j = N-m .. N-1: t = below(j+1); select t unless already selected,
/// in which case select j.
inline Graph random_gnm(std::size_t n, std::uint64_t m, std::uint64_t seed) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
  if (m > pairs) throw std::invalid_argument("edge count exceeds n(n-1)/2");
  SplitMix64 rng(seed);
  std::vector<bool> chosen(pairs, false);
  for (std::uint64_t j = pairs - m; j < pairs; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (chosen[t]) {
      chosen[j] = true;
    } else {
      chosen[t] = true;
    }
  }
  Graph g(n);
  Vertex u = 0, v = 1;
  for (std::uint64_t k = 0; k < pairs; ++k) {
    if (chosen[k]) g.add_edge(u, v);
    if (++v == n) {
      ++u;
      v = u + 1;
    }
  }
  return g;
}

/// Induced subgraph on `subset`, relabelled 0..|subset|-1 in subset order.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  for (Vertex v : subset) {
    if (v >= g.order()) throw std::out_of_range("induced_subgraph: vertex out of range");
  }
  Graph h(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (subset[i] == subset[j]) throw std::invalid_argument("induced_subgraph: repeated vertex");
      if (g.adjacent(subset[i], subset[j])) h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return h;
}

/// Graph on n <= 11 vertices whose edges are the set bits of `mask` under
/// the lexicographic pair order. Used by exhaustive scans.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::uint64_t k = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++k) {
      if ((mask >> k) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace turanlab
