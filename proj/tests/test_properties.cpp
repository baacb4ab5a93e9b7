// Property suites for the ontology operations over random pairs.

#include <gtest/gtest.h>

#include "lwo/algebra.hpp"
#include "lwo/reason.hpp"
#include "random_ontology.hpp"

using namespace lwo;
using namespace lwo::testing;

namespace {

RandomParams pairParams() {
  RandomParams p;
  p.maxConstraints = 10;
  return p;
}

int counts(const Ontology& a, const Ontology& b) {
  return std::max(maxCountOf(a.constraints()), maxCountOf(b.constraints())) + 1;
}

}  // namespace

TEST(AlgebraProperty, ProjectionPreservesExactlyTheVisibleTheory) {
  Rng rng(301);
  for (int round = 0; round < 200; ++round) {
    const Ontology a = randomOntology(rng, pairParams());
    const Vocabulary w = randomSubset(rng, a.vocabulary());
    const Ontology p = project(a, w);
    EXPECT_EQ(p.vocabulary(), w);
    const auto universe = probeUniverse(w, maxCountOf(a.constraints()) + 1);
    const Reasoner ra(a.constraints(), universe);
    const Reasoner rp(p.constraints(), universe);
    for (const auto& q : lightweightQueries(universe)) ASSERT_EQ(ra.implies(q), rp.implies(q)) << toString(q);
  }
}

TEST(AlgebraProperty, IntersectionIsTheSharedTheory) {
  Rng rng(302);
  for (int round = 0; round < 200; ++round) {
    const Ontology a = randomOntology(rng, pairParams());
    const Ontology b = randomOntology(rng, pairParams());
    const Ontology meet = intersect(a, b);
    const Vocabulary shared = intersect(a.vocabulary(), b.vocabulary());
    EXPECT_EQ(meet.vocabulary(), shared);
    const auto universe = probeUniverse(shared, counts(a, b));
    const Reasoner ra(a.constraints(), universe);
    const Reasoner rb(b.constraints(), universe);
    const Reasoner rm(meet.constraints(), universe);
    for (const auto& q : lightweightQueries(universe))
      ASSERT_EQ(rm.implies(q), ra.implies(q) && rb.implies(q)) << toString(q);
    EXPECT_TRUE(equivalentTheories(meet.constraints(), intersect(b, a).constraints()));
  }
}

// Soundness of the difference, checked on the emitted constraints and on
// every non-valid consequence over a probe universe.
TEST(AlgebraProperty, DifferenceIsSound) {
  Rng rng(303);
  for (int round = 0; round < 200; ++round) {
    const Ontology a = randomOntology(rng, pairParams());
    const Ontology b = randomOntology(rng, pairParams());
    const Ontology d = difference(a, b);
    EXPECT_EQ(d.vocabulary(), a.vocabulary());
    for (const auto& q : d.constraints()) {
      EXPECT_TRUE(implies(a.constraints(), q)) << toString(q);
      EXPECT_FALSE(implies(b.constraints(), q)) << toString(q);
    }
    const auto universe = probeUniverse(merge(a.vocabulary(), b.vocabulary()), counts(a, b));
    const Reasoner ra(a.constraints(), universe);
    const Reasoner rb(b.constraints(), universe);
    const Reasoner rd(d.constraints(), universe);
    const Reasoner valid(ConstraintSet{}, universe);
    for (const auto& q : lightweightQueries(universe)) {
      if (valid.implies(q) || !rd.implies(q)) continue;
      ASSERT_TRUE(ra.implies(q)) << toString(q);
      ASSERT_FALSE(rb.implies(q)) << toString(q);
    }
  }
}

TEST(AlgebraProperty, DifferenceWithItselfIsEmpty) {
  Rng rng(304);
  for (int round = 0; round < 100; ++round) {
    const Ontology a = randomOntology(rng, pairParams());
    EXPECT_TRUE(difference(a, a).constraints().empty());
  }
}

TEST(AlgebraProperty, UnionIsAnUpperBoundAndCommutes) {
  Rng rng(305);
  for (int round = 0; round < 200; ++round) {
    const Ontology a = randomOntology(rng, pairParams());
    const Ontology b = randomOntology(rng, pairParams());
    const Ontology u = unite(a, b);
    for (const auto* s : {&a.constraints(), &b.constraints()})
      for (const auto& q : *s) EXPECT_TRUE(implies(u.constraints(), q)) << toString(q);
    EXPECT_TRUE(equivalentTheories(u.constraints(), unite(b, a).constraints()));
    EXPECT_EQ(u.vocabulary(), merge(a.vocabulary(), b.vocabulary()));
  }
}

TEST(AlgebraProperty, ClosedFragmentEmptiesHiddenNames) {
  Rng rng(306);
  for (int round = 0; round < 100; ++round) {
    const Ontology a = randomOntology(rng, pairParams());
    const Vocabulary w = randomSubset(rng, a.vocabulary());
    const Ontology f = closedFragment(a, w);
    const Reasoner r(f.constraints());
    for (const auto& c : a.vocabulary().concepts)
      if (!w.concepts.count(c)) EXPECT_TRUE(r.implies(Concept::atomic(c), Concept::bottom()));
    for (const auto& p : a.vocabulary().roles)
      if (!w.roles.count(p)) EXPECT_TRUE(r.implies(Concept::exists(p, true), Concept::bottom()));
    const Ontology open = project(a, w);
    for (const auto& q : open.constraints()) EXPECT_TRUE(r.implies(q));
  }
}

TEST(AlgebraProperty, RenameRoundTrips) {
  Rng rng(307);
  for (int round = 0; round < 100; ++round) {
    const Ontology a = randomOntology(rng);
    RenamingMap there, back;
    for (const auto& c : a.vocabulary().concepts) {
      const Name fresh = Name::plain("X" + c.local());
      there.add(c, fresh);
      back.add(fresh, c);
    }
    const Ontology renamed = rename(a, there);
    EXPECT_EQ(renamed.constraints().size(), a.constraints().size());
    EXPECT_EQ(rename(renamed, back), a);
  }
}
