// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// when any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "lwo/algebra.hpp"
#include "lwo/graph.hpp"
#include "lwo/minimize.hpp"
#include "lwo/reason.hpp"
#include "random_ontology.hpp"

using namespace lwo;
using namespace lwo::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::vector<Ontology> corpus() {
  Rng rng(20101);
  std::vector<Ontology> out;
  for (int i = 0; i < 500; ++i) out.push_back(randomOntology(rng));
  return out;
}

ConstraintSet set(std::initializer_list<const char*> texts) {
  ConstraintSet s;
  for (const char* t : texts) s.insert(inc(t));
  return s;
}

Outcome criterion1() {
  Outcome o;
  const ConstraintSet apo = loadFixture("apo.onto").ontology.constraints();
  for (const char* q : {"mo:Label sub foaf:Organization", "mo:Label sub foaf:Agent", "mo:Label sub not foaf:Person",
                        "mo:Label sub not mo:SoloMusicArtist", "mo:Label sub not atleast 1 foaf:name",
                        "mo:Label sub not atleast 1 mo:member_of"})
    o.require(implies(apo, inc(q)), std::string("expected consequence: ") + q);
  const char* nonConsequences[] = {"foaf:Person sub foaf:Agent",
                                   "foaf:Agent sub foaf:Person",
                                   "mo:MusicArtist sub foaf:Person",
                                   "foaf:Group sub not foaf:Person",
                                   "mo:Label sub mo:MusicArtist",
                                   "mo:MusicGroup sub not mo:SoloMusicArtist",
                                   "atleast 1 foaf:name sub mo:SoloMusicArtist",
                                   "foaf:Agent sub Bottom",
                                   "mo:MusicArtist sub foaf:Group",
                                   "atleast 1 mo:member_of sub not foaf:Group"};
  for (const char* q : nonConsequences) {
    o.require(!oracleImplies(apo, inc(q)), std::string("oracle does not confirm non-consequence: ") + q);
    o.require(!implies(apo, inc(q)), std::string("unexpected consequence: ") + q);
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const ConstraintSet pmg = loadFixture("pmg.onto").ontology.constraints();
  const ConstraintSet table6 = loadFixture("pmg_min.onto").ontology.constraints();
  const ConstraintSet theta = minimizeConstraints(pmg);
  o.require(theta.size() == 5, "expected 5 constraints, got " + std::to_string(theta.size()));
  o.require(equivalentTheories(theta, table6), "result is not equivalent to the reference table");
  o.require(!theta.count(inc("mo:MusicGroup sub foaf:Agent")), "kept mo:MusicGroup sub foaf:Agent");
  o.require(!theta.count(inc("atleast 1 inv mo:member_of sub foaf:Agent")), "kept (>= 1 member_of-) sub foaf:Agent");
  const int orientations = static_cast<int>(theta.count(inc("foaf:Person sub not foaf:Agent")) +
                                            theta.count(inc("foaf:Agent sub not foaf:Person")));
  o.require(orientations == 1, "disjointness appears " + std::to_string(orientations) + " times");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const Ontology apo = loadFixture("apo.onto").ontology;
  const Ontology mac = loadFixture("mac.onto").ontology;
  const Ontology projected = project(apo, mac.vocabulary());
  o.require(equivalentTheories(projected.constraints(), mac.constraints()), "projection differs from the reference table");
  o.require(implies(projected.constraints(), inc("mo:Label sub not atleast 1 foaf:name")), "missing label/name consequence");
  o.require(implies(projected.constraints(), inc("mo:Label sub not mo:SoloMusicArtist")), "missing label/solo consequence");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const Ontology dblp = loadFixture("dblp.onto").ontology;
  const Ontology lattes = loadFixture("lattes.onto").ontology;
  RenamingMap m;
  m.add(Name::plain("Document"), Name::plain("Publication"));
  const Ontology meet = intersect(dblp, rename(lattes, m));
  const ConstraintSet expected = loadFixture("dblp_lattes_meet.onto").ontology.constraints();
  o.require(equivalentTheories(meet.constraints(), expected), "intersection differs from the expected shared constraints");
  o.require(minimizeConstraints(meet.constraints()).size() == 3, "minimized intersection does not have 3 constraints");
  return o;
}

Outcome criterion5() {
  Outcome o;
  const Ontology foaf1 = loadFixture("foaf1.onto").ontology;
  const Ontology foaf2 = loadFixture("foaf2.onto").ontology;
  const ConstraintSet expected = loadFixture("foaf_diff.onto").ontology.constraints();
  const Ontology d = difference(foaf1, foaf2);
  o.require(equivalentTheories(d.constraints(), expected), "difference differs from the reference column");
  for (const auto& q : expected) {
    o.require(implies(foaf1.constraints(), q), "older release misses " + toString(q));
    o.require(!implies(foaf2.constraints(), q), "newer release implies " + toString(q));
  }
  const ConstraintSet s1 = set({"e sub g", "g sub f"});
  const ConstraintSet s2 = set({"e sub f"});
  const Ontology d1 = difference(Ontology(vocabularyOf(s1), s1), Ontology(vocabularyOf(s2), s2));
  o.require(equivalentTheories(d1.constraints(), set({"e sub g"})), "chain difference is not {e sub g}");
  return o;
}

Outcome criterion6(const std::vector<Ontology>& c) {
  Outcome o;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const ConstraintSet& sigma = c[i].constraints();
    const ConstraintSet theta = minimizeConstraints(sigma);
    o.require(equivalentTheories(sigma, theta), "ontology " + std::to_string(i) + ": minimized set not equivalent");
    for (const auto& drop : theta) {
      ConstraintSet smaller = theta;
      smaller.erase(drop);
      o.require(!equivalentTheories(sigma, smaller),
                "ontology " + std::to_string(i) + ": " + toString(drop) + " is redundant");
    }
  }
  return o;
}

std::set<Concept> occurringUniverse(const ConstraintSet& sigma) {
  std::set<Concept> u = occurringDescriptions(sigma);
  u.insert(Concept::bottom());
  std::set<Concept> closed = u;
  for (const auto& e : u) closed.insert(complement(e));
  return closed;
}

Outcome criterion7(const std::vector<Ontology>& c, std::size_t& queries) {
  Outcome o;
  queries = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const ConstraintSet& sigma = c[i].constraints();
    const auto universe = occurringUniverse(sigma);
    const Saturation oracle(sigma, universe);
    for (const auto& q : lightweightQueries(universe)) {
      ++queries;
      o.require(implies(sigma, q) == oracle.implies(q), "ontology " + std::to_string(i) + ": disagreement on " + toString(q));
    }
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  Rng rng(4242);
  RandomParams p;
  p.maxConstraints = 10;
  for (int round = 0; round < 200; ++round) {
    // Projection.
    const Ontology a = randomOntology(rng, p);
    const Vocabulary w = randomSubset(rng, a.vocabulary());
    const Ontology proj = project(a, w);
    const auto universe = probeUniverse(w, maxCountOf(a.constraints()) + 1);
    const Reasoner ra(a.constraints(), universe);
    const Reasoner rp(proj.constraints(), universe);
    for (const auto& q : lightweightQueries(universe))
      o.require(ra.implies(q) == rp.implies(q), "projection round " + std::to_string(round) + ": " + toString(q));

    // Intersection.
    const Ontology b = randomOntology(rng, p);
    const Ontology meet = intersect(a, b);
    const Vocabulary shared = intersect(a.vocabulary(), b.vocabulary());
    const int counts = std::max(maxCountOf(a.constraints()), maxCountOf(b.constraints())) + 1;
    const auto sharedUniverse = probeUniverse(shared, counts);
    const Reasoner rb(b.constraints(), sharedUniverse);
    const Reasoner ra2(a.constraints(), sharedUniverse);
    const Reasoner rm(meet.constraints(), sharedUniverse);
    for (const auto& q : lightweightQueries(sharedUniverse))
      o.require(rm.implies(q) == (ra2.implies(q) && rb.implies(q)),
                "intersection round " + std::to_string(round) + ": " + toString(q));

    // Difference.
    const Ontology d = difference(a, b);
    for (const auto& q : d.constraints()) {
      o.require(implies(a.constraints(), q), "difference round " + std::to_string(round) + ": unsound " + toString(q));
      o.require(!implies(b.constraints(), q), "difference round " + std::to_string(round) + ": shared " + toString(q));
    }
  }
  return o;
}

Outcome criterion9(const std::vector<Ontology>& c) {
  Outcome o;
  auto check = [&](const ConstraintGraph& g, const std::string& what) {
    const auto problems = checkInvariants(g);
    o.require(problems.empty(), what + ": " + (problems.empty() ? "" : problems.front()));
  };
  for (std::size_t i = 0; i < c.size(); ++i) {
    const ConstraintSet& sigma = c[i].constraints();
    const std::string id = "ontology " + std::to_string(i);
    const ConstraintGraph g = buildGraph(sigma);
    check(g, id);
    check(buildGraph(sigma, probeUniverse(c[i].vocabulary(), maxCountOf(sigma) + 1)), id + " with probes");
    check(transitiveClosure(g), id + " closure");
    check(minimizeGraph(g), id + " minimized");
  }
  return o;
}

Outcome criterion10(double& seconds) {
  Outcome o;
  Rng rng(777);
  RandomParams p;
  p.concepts = 80;
  p.roles = 10;
  p.maxCount = 3;
  p.negatedRhs = 0.15;
  p.bottomRhs = 0.0;
  ConstraintSet sigma;
  while (sigma.size() < 200) sigma.insert(randomInclusion(rng, p));
  const auto start = std::chrono::steady_clock::now();
  const ConstraintSet theta = minimizeConstraints(sigma);
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(seconds < 1.0, "took " + std::to_string(seconds) + " s");
  o.require(equivalentTheories(sigma, theta), "minimized set not equivalent");
  return o;
}

Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return Outcome{false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

int main() {
  const auto c = corpus();
  std::size_t queries = 0;
  double seconds = 0;
  struct Row {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Row> rows = {
      {1, "consequences of the Agent-Person ontology", criterion1},
      {2, "minimization of the Person Music Group ontology", criterion2},
      {3, "projection onto the Music Artist Contract vocabulary", criterion3},
      {4, "intersection of the bibliographic sources", criterion4},
      {5, "difference of the FOAF releases", criterion5},
      {6, "minimized sets are equivalent and locally minimal (500 ontologies)", [&] { return criterion6(c); }},
      {7, "graph procedure agrees with the saturation oracle", [&] { return criterion7(c, queries); }},
      {8, "projection, intersection and difference properties (200 pairs)", criterion8},
      {9, "structural graph invariants on the corpus", [&] { return criterion9(c); }},
      {10, "200-constraint minimization under one second", [&] { return criterion10(seconds); }},
  };
  bool all = true;
  for (const auto& row : rows) {
    const Outcome out = guarded(row.run);
    std::ostringstream line;
    line << "criterion " << row.id << ": " << (out.pass ? "PASS" : "FAIL") << "  " << row.title;
    if (row.id == 7) line << " (" << queries << " queries)";
    if (row.id == 10) line << " (" << seconds << " s)";
    if (!out.pass) line << "  [" << out.detail << "]";
    std::cout << line.str() << std::endl;
    all = all && out.pass;
  }
  return all ? 0 : 1;
}
