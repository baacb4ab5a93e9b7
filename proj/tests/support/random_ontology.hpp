#ifndef LWO_TEST_RANDOM_ONTOLOGY_HPP
#define LWO_TEST_RANDOM_ONTOLOGY_HPP

#include <random>
#include <set>
#include <vector>

#include "lwo/model.hpp"

namespace lwo::testing {

struct RandomParams {
  int concepts = 6;        // C0..C5
  int roles = 3;           // P0..P2
  int maxCount = 3;
  int maxConstraints = 15;
  double negatedRhs = 0.3;
  double bottomRhs = 0.05;
};

using Rng = std::mt19937_64;

Name conceptName(int i);
Name roleName(int i);

Concept randomPositive(Rng& rng, const RandomParams& p);
Inclusion randomInclusion(Rng& rng, const RandomParams& p);
ConstraintSet randomConstraints(Rng& rng, const RandomParams& p = {});
/// Vocabulary of the constraints plus a few unused names.
Ontology randomOntology(Rng& rng, const RandomParams& p = {});

/// A random subset of v.
Vocabulary randomSubset(Rng& rng, const Vocabulary& v);

/// Atomic concepts of v, (>= n p) for n in 1..maxCount in both directions for
/// each role of v, Bottom, the given extra descriptions, and all complements.
std::set<Concept> probeUniverse(const Vocabulary& v, int maxCount, const std::set<Concept>& extra = {});

/// Largest at-least count written in sigma (0 when none).
int maxCountOf(const ConstraintSet& sigma);

/// Every lightweight inclusion whose two sides are drawn from the universe.
std::vector<Inclusion> lightweightQueries(const std::set<Concept>& universe);

}  // namespace lwo::testing

#endif
