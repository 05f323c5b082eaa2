#include <gtest/gtest.h>

#include <vector>

#include "support/oracles.hpp"
#include "turanlab/cliques.hpp"
#include "turanlab/coloring.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/rng.hpp"

using namespace turanlab;

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(CountCliques, Examples) {
  EXPECT_EQ(count_cliques(make_complete(5), 3).count, 10u);
  EXPECT_EQ(count_cliques(make_turan(6, 3), 3).count, 8u);
  EXPECT_EQ(count_cliques(make_turan(6, 2), 3).count, 0u);
  EXPECT_EQ(count_cliques(make_complete(4), 5).count, 0u);
  EXPECT_EQ(count_cliques(make_complete(4), 1).count, 4u);
  EXPECT_THROW(count_cliques(make_complete(4), 0), std::invalid_argument);
}

TEST(CountCliques, WideCounts) {
  EXPECT_EQ(count_cliques(make_complete(30), 10).count, binom(30, 10));
  // counts are 128-bit; the string form must cover the full range
  const Count big = static_cast<Count>(1) << 100;
  EXPECT_EQ(to_string(big), "1267650600228229401496703205376");
}

TEST(CliqueExists, Examples) {
  const auto tri = clique_exists(make_turan(6, 2).with_edge(0, 1), 3);
  ASSERT_TRUE(tri);
  EXPECT_EQ(*tri, (std::vector<Vertex>{0, 1, 3}));
  for (std::size_t r = 2; r <= 5; ++r) EXPECT_FALSE(clique_exists(make_turan(17, r), r + 1));
  EXPECT_EQ(*clique_exists(make_complete(4), 4), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_FALSE(clique_exists(make_complete(3), 4));
}

TEST(JointSize, Examples) {
  EXPECT_EQ(joint_size(make_complete(4), 3).size, 2u);
  EXPECT_EQ(joint_size(make_complete(5), 4).size, 3u);
  const auto j = joint_size(make_turan(6, 2).with_edge(0, 1), 3);
  EXPECT_EQ(j.size, 3u);
  EXPECT_EQ(*j.witness_edge, Edge(0, 1));
  const auto none = joint_size(Graph(5), 3);
  EXPECT_EQ(none.size, 0u);
  EXPECT_FALSE(none.witness_edge);
  EXPECT_THROW(joint_size(make_complete(3), 1), std::invalid_argument);
}

TEST(JointSize, PerEdgeMap) {
  const auto j = joint_size(make_complete(4), 3, true);
  ASSERT_TRUE(j.per_edge);
  EXPECT_EQ(j.per_edge->size(), 6u);
  for (const auto& [e, c] : *j.per_edge) EXPECT_EQ(c, 2u);
}

TEST(BookSize, Examples) {
  EXPECT_EQ(book_size(make_complete(5), 2).size, 3u);
  const auto b = book_size(make_turan(9, 3), 2);
  EXPECT_EQ(b.size, 3u);
  EXPECT_EQ(*b.base_clique, (std::vector<Vertex>{0, 3}));
  const auto none = book_size(make_turan(8, 2), 3);
  EXPECT_EQ(none.size, 0u);
  EXPECT_FALSE(none.base_clique);
  EXPECT_EQ(book_size(make_book(9, 3), 3).size, 6u);
}

TEST(Oracle, CliquesJointsBooksOnRandomSmallGraphs) {
  SplitMix64 rng(77);
  for (int t = 0; t < 1500; ++t) {
    const std::size_t n = 1 + rng.below(7);
    const std::uint64_t pairs = n * (n - 1) / 2;
    const Graph g = random_gnm(n, rng.below(pairs + 1), rng());
    for (std::size_t r = 1; r <= n; ++r) {
      EXPECT_EQ(count_cliques(g, r).count, oracle::count_cliques(g, r));
      EXPECT_EQ(clique_exists(g, r).has_value(), oracle::count_cliques(g, r) > 0);
      const auto b = book_size(g, r);
      const auto ob = oracle::book(g, r);
      EXPECT_EQ(b.size, ob.size);
      EXPECT_EQ(b.base_clique, ob.base);
      if (r >= 2) {
        const auto j = joint_size(g, r);
        const auto oj = oracle::joint(g, r);
        EXPECT_EQ(j.size, oj.size);
        EXPECT_EQ(j.witness_edge, oj.edge);
      }
    }
  }
}

TEST(Invariants, JointBoundsAndCliqueRelation) {
  SplitMix64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 4 + rng.below(14);
    const Graph g = random_gnm(n, rng.below(n * (n - 1) / 2 + 1), rng());
    if (g.edge_count() == 0) continue;
    for (std::size_t r = 2; r <= 6; ++r) {
      const auto j = joint_size(g, r);
      EXPECT_LE(j.size, binom(n - 2, r - 2));
      EXPECT_EQ(j.size > 0, clique_exists(g, r).has_value());
      EXPECT_GE(count_cliques(g, r).count, j.size);
    }
  }
}

TEST(Invariants, Monotonicity) {
  SplitMix64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 6 + rng.below(8);
    Graph g = random_gnm(n, rng.below(n * (n - 1) / 2 + 1), rng());
    const Vertex u = static_cast<Vertex>(rng.below(n));
    const Vertex v = static_cast<Vertex>((u + 1 + rng.below(n - 1)) % n);
    const Graph h = g.with_edge(u, v);
    for (std::size_t r = 2; r <= 5; ++r) {
      EXPECT_GE(count_cliques(h, r).count, count_cliques(g, r).count);
      EXPECT_GE(joint_size(h, r).size, joint_size(g, r).size);
      EXPECT_GE(book_size(h, r).size, book_size(g, r).size);
    }
  }
}

TEST(Coloring, Examples) {
  EXPECT_EQ(is_r_partite(make_cycle(5), 2).status, ColoringStatus::NotColorable);
  const auto c3 = is_r_partite(make_cycle(5), 3);
  ASSERT_EQ(c3.status, ColoringStatus::Colorable);
  EXPECT_TRUE(is_proper_coloring(make_cycle(5), c3.coloring, 3));

  const auto t = is_r_partite(make_turan(7, 3), 3);
  ASSERT_EQ(t.status, ColoringStatus::Colorable);
  // colour classes coincide with the parts {0,1,2} {3,4} {5,6}
  EXPECT_EQ(t.coloring[0], t.coloring[1]);
  EXPECT_EQ(t.coloring[1], t.coloring[2]);
  EXPECT_EQ(t.coloring[3], t.coloring[4]);
  EXPECT_EQ(t.coloring[5], t.coloring[6]);
  EXPECT_NE(t.coloring[0], t.coloring[3]);
  EXPECT_NE(t.coloring[3], t.coloring[5]);
  EXPECT_NE(t.coloring[0], t.coloring[5]);

  EXPECT_EQ(is_r_partite(make_complete(4), 3).status, ColoringStatus::NotColorable);
  EXPECT_EQ(is_r_partite(Graph(3), 1).status, ColoringStatus::Colorable);
  EXPECT_THROW(is_r_partite(Graph(3), 0), std::invalid_argument);
}

TEST(Coloring, MatchesBruteForce) {
  SplitMix64 rng(91);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 1 + rng.below(8);
    const Graph g = random_gnm(n, rng.below(n * (n - 1) / 2 + 1), rng());
    for (std::size_t r = 1; r <= 4; ++r) {
      const auto c = is_r_partite(g, r);
      EXPECT_EQ(c.status == ColoringStatus::Colorable, oracle::colorable(g, r));
      if (c.status == ColoringStatus::Colorable) {
        EXPECT_TRUE(is_proper_coloring(g, c.coloring, r));
      }
    }
  }
}

TEST(Coloring, CapIsReported) {
  // K_12 minus nothing is not 11-colourable; a tiny cap cannot finish
  const auto c = is_r_partite(make_complete(12), 11, 5);
  EXPECT_EQ(c.status, ColoringStatus::CapExhausted);
}
