#include <gtest/gtest.h>

#include <random>

#include "lwo/error.hpp"
#include "lwo/reach.hpp"

using namespace lwo;

namespace {

// Random DAG on n nodes: arcs only go from lower to higher index.
Adjacency randomDag(std::mt19937_64& rng, int n, double density) {
  Adjacency adj(static_cast<std::size_t>(n));
  std::bernoulli_distribution arc(density);
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (arc(rng)) adj[static_cast<std::size_t>(v)].push_back(w);
  return adj;
}

}  // namespace

TEST(BitMatrix, Operations) {
  BitMatrix m(130);
  m.set(0, 129);
  m.set(1, 5);
  EXPECT_TRUE(m.test(0, 129));
  EXPECT_FALSE(m.rowsIntersect(0, 1));
  EXPECT_TRUE(m.orRow(0, 1));
  EXPECT_FALSE(m.orRow(0, 1));
  EXPECT_TRUE(m.rowsIntersect(0, 1));
  m.reset(0, 129);
  EXPECT_FALSE(m.test(0, 129));
}

TEST(Reach, ChainIsTransitiveButNotReflexive) {
  const Adjacency chain{{1}, {2}, {}};
  const BitMatrix r = reachability(chain);
  EXPECT_FALSE(r.test(0, 0));
  EXPECT_TRUE(r.test(0, 2));
  EXPECT_FALSE(r.test(2, 0));
  EXPECT_EQ(r, reachabilityReference(chain));
}

TEST(Reach, TransitiveArcIsRedundant) {
  const Adjacency g{{1, 2}, {2}, {}};
  const auto red = redundantArcs(g, reachability(g));
  EXPECT_FALSE(red[0][0]);
  EXPECT_TRUE(red[0][1]);
  EXPECT_FALSE(red[1][0]);
  EXPECT_EQ(red, redundantArcsReference(g));
}

TEST(Reach, HeightsRejectCycles) {
  EXPECT_THROW(heights(Adjacency{{1}, {0}}), Error);
  const auto h = heights(Adjacency{{1}, {}});
  EXPECT_GT(h[0], h[1]);
}

// The parallel kernels must agree with the serial reference on every input;
// sizes above the parallel threshold are included.
TEST(ReachProperty, ParallelMatchesReference) {
  std::mt19937_64 rng(5);
  for (int n : {0, 1, 7, 40, 120, 300, 600}) {
    for (double density : {0.01, 0.05, 0.3}) {
      const Adjacency g = randomDag(rng, n, density);
      const BitMatrix r = reachability(g);
      EXPECT_EQ(r, reachabilityReference(g)) << n << " " << density;
      if (n <= 300) EXPECT_EQ(redundantArcs(g, r), redundantArcsReference(g)) << n << " " << density;
    }
  }
}

// Removing all redundant arcs keeps reachability and leaves nothing redundant.
TEST(ReachProperty, ReductionIsMinimalAndEquivalent) {
  std::mt19937_64 rng(6);
  for (int round = 0; round < 30; ++round) {
    const Adjacency g = randomDag(rng, 50, 0.15);
    const BitMatrix r = reachability(g);
    const auto red = redundantArcs(g, r);
    Adjacency h(g.size());
    for (std::size_t v = 0; v < g.size(); ++v)
      for (std::size_t k = 0; k < g[v].size(); ++k)
        if (!red[v][k]) h[v].push_back(g[v][k]);
    EXPECT_EQ(reachability(h), r);
    for (const auto& row : redundantArcs(h, reachability(h)))
      for (bool b : row) EXPECT_FALSE(b);
  }
}
