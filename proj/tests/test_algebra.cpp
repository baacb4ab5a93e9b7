#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lwo/algebra.hpp"
#include "lwo/error.hpp"
#include "lwo/minimize.hpp"
#include "lwo/reason.hpp"
#include "random_ontology.hpp"

using namespace lwo;
using namespace lwo::testing;

namespace {

const Name nC = Name::plain("C"), nD = Name::plain("D"), nE = Name::plain("E");
const Concept C = Concept::atomic(nC), D = Concept::atomic(nD), E = Concept::atomic(nE);

Ontology onto(const ConstraintSet& s) { return Ontology(vocabularyOf(s), s); }
Ontology fixture(const char* name) { return loadFixture(name).ontology; }

ConstraintSet set(std::initializer_list<const char*> texts) {
  ConstraintSet s;
  for (const char* t : texts) s.insert(inc(t));
  return s;
}

}  // namespace

TEST(Union, AgentPersonFromItsParts) {
  const Ontology o3 = unite(fixture("apo_foaf.onto"), fixture("apo_music.onto"));
  const Ontology o5 = unite(o3, fixture("apo_links.onto"));
  EXPECT_TRUE(equivalentTheories(o5.constraints(), fixture("apo.onto").constraints()));
  EXPECT_EQ(o5.vocabulary(), fixture("apo.onto").vocabulary());
}

TEST(Union, Trivial) {
  const Ontology a(Vocabulary{{nC}, {}}, {});
  const Ontology b(Vocabulary{{nD}, {}}, {});
  const Ontology u = unite(a, b);
  EXPECT_EQ(u.vocabulary().concepts, (std::set<Name>{nC, nD}));
  EXPECT_TRUE(u.constraints().empty());
  const Ontology apo = fixture("apo.onto");
  EXPECT_EQ(unite(apo, apo).constraints(), minimizeConstraints(apo.constraints()));
  EXPECT_THROW(unite(a, Ontology(Vocabulary{{}, {nC}}, {})), ValidationError);
}

TEST(Deprecate, Examples) {
  const Ontology apo = fixture("apo.onto");
  const auto r = deprecate(apo, set({"mo:Label sub mo:CorporateBody"}));
  EXPECT_TRUE(r.absent.empty());
  EXPECT_FALSE(implies(r.ontology.constraints(), inc("mo:Label sub foaf:Organization")));
  EXPECT_EQ(r.ontology.vocabulary(), apo.vocabulary());
  EXPECT_TRUE(equivalentTheories(deprecate(apo, {}).ontology.constraints(), apo.constraints()));
  EXPECT_TRUE(deprecate(apo, apo.constraints()).ontology.constraints().empty());
  const auto missing = deprecate(apo, set({"mo:Label sub foaf:Agent"}));
  EXPECT_EQ(missing.absent.size(), 1u);
}

TEST(Deprecate, IsNotDifference) {
  // Dropping C sub D keeps it implied through E.
  const Ontology o = onto({{C, E}, {E, D}, {C, D}});
  const auto r = deprecate(o, {{C, D}});
  EXPECT_TRUE(implies(r.ontology.constraints(), {C, D}));
}

TEST(Project, Examples) {
  const Ontology apo = fixture("apo.onto");
  const Ontology mac = project(apo, fixture("mac.onto").vocabulary());
  EXPECT_TRUE(equivalentTheories(mac.constraints(), fixture("mac.onto").constraints()));
  EXPECT_TRUE(equivalentTheories(project(apo, apo.vocabulary()).constraints(), apo.constraints()));
  const Ontology chain(Vocabulary{{nC, nD, nE}, {}}, {{C, D}, {D, E}});
  EXPECT_EQ(project(chain, Vocabulary{{nC, nE}, {}}).constraints(), (ConstraintSet{{C, E}}));
}

TEST(Project, RejectsUnknownNames) {
  const Ontology o = onto({{C, D}});
  try {
    project(o, Vocabulary{{nC, Name::plain("Zebra")}, {}});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("Zebra"), std::string::npos);
  }
}

TEST(Project, KeepsEmptinessThroughHiddenNames) {
  const Ontology o = onto({{C, E}, {C, complement(E)}});
  EXPECT_TRUE(implies(project(o, Vocabulary{{nC}, {}}).constraints(), {C, Concept::bottom()}));
}

TEST(ClosureDelta, Examples) {
  EXPECT_EQ(closureDelta({{C, D}}, {{C, E}}), (std::set<Concept>{D, E}));
  EXPECT_TRUE(closureDelta({{C, D}}, {{C, D}}).empty());
  RenamingMap m;
  m.add(Name::plain("Document"), Name::plain("Publication"));
  const auto delta = closureDelta(fixture("dblp.onto").constraints(), rename(fixture("lattes.onto"), m).constraints());
  for (const char* n : {"Event", "Place", "Book", "Series"}) EXPECT_TRUE(delta.count(Concept::atomic(Name::plain(n)))) << n;
  EXPECT_FALSE(delta.count(Concept::atomic(Name::plain("Publication"))));
}

TEST(Intersect, Examples) {
  RenamingMap m;
  m.add(Name::plain("Document"), Name::plain("Publication"));
  const Ontology meet = intersect(fixture("dblp.onto"), rename(fixture("lattes.onto"), m));
  EXPECT_TRUE(equivalentTheories(meet.constraints(), fixture("dblp_lattes_meet.onto").constraints()));
  EXPECT_EQ(meet.constraints().size(), 3u);
  const Ontology apo = fixture("apo.onto");
  EXPECT_TRUE(equivalentTheories(intersect(apo, apo).constraints(), apo.constraints()));
  const Ontology a(Vocabulary{{nC, nD}, {}}, {{C, Concept::bottom()}});
  const Ontology b(Vocabulary{{nC, nD}, {}}, {{C, D}, {C, complement(D)}});
  EXPECT_TRUE(implies(intersect(a, b).constraints(), {C, Concept::bottom()}));
}

TEST(Difference, Examples) {
  const Ontology d = difference(fixture("foaf1.onto"), fixture("foaf2.onto"));
  EXPECT_TRUE(equivalentTheories(d.constraints(), fixture("foaf_diff.onto").constraints()));
  EXPECT_EQ(d.vocabulary(), fixture("foaf1.onto").vocabulary());
  const ConstraintSet s1 = set({"e sub g", "g sub f"});
  const ConstraintSet s2 = set({"e sub f"});
  EXPECT_TRUE(equivalentTheories(difference(onto(s1), onto(s2)).constraints(), set({"e sub g"})));
  const Ontology apo = fixture("apo.onto");
  EXPECT_TRUE(difference(apo, apo).constraints().empty());
}

TEST(ClosedFragment, Examples) {
  const Ontology apo = fixture("apo.onto");
  const Ontology closed = closedFragment(apo, fixture("mac.onto").vocabulary());
  EXPECT_TRUE(implies(closed.constraints(), inc("foaf:Person sub Bottom")));
  EXPECT_TRUE(implies(closed.constraints(), inc("atleast 1 mo:member_of sub Bottom")));
  EXPECT_TRUE(implies(closed.constraints(), inc("mo:Label sub not mo:SoloMusicArtist")));
  EXPECT_EQ(closed.vocabulary(), apo.vocabulary());
  EXPECT_TRUE(equivalentTheories(closedFragment(apo, apo.vocabulary()).constraints(), apo.constraints()));
  // The projection onto {C} forgets C sub D before D is declared empty.
  const Ontology small(Vocabulary{{nC, nD}, {}}, {{C, D}});
  const Ontology f = closedFragment(small, Vocabulary{{nC}, {}});
  EXPECT_TRUE(implies(f.constraints(), {D, Concept::bottom()}));
  EXPECT_FALSE(implies(f.constraints(), {C, Concept::bottom()}));
}

TEST(Rename, Examples) {
  RenamingMap m;
  m.add(Name::plain("Document"), Name::plain("Publication"));
  const Ontology r = rename(fixture("lattes.onto"), m);
  EXPECT_TRUE(r.constraints().count({Concept::atomic(Name::plain("Article")), Concept::atomic(Name::plain("Publication"))}));
  EXPECT_FALSE(r.vocabulary().contains(Name::plain("Document")));
  const Ontology apo = fixture("apo.onto");
  EXPECT_EQ(rename(apo, RenamingMap{}), apo);
  RenamingMap back;
  back.add(Name::plain("Publication"), Name::plain("Document"));
  EXPECT_EQ(rename(r, back), fixture("lattes.onto"));
}

TEST(Rename, Errors) {
  const Ontology o(Vocabulary{{nC, nD}, {Name::plain("P")}}, {{C, D}});
  RenamingMap collapse;
  collapse.add(nC, nD);
  EXPECT_THROW(rename(o, collapse), ValidationError);
  RenamingMap unknown;
  unknown.add(Name::plain("Q"), nE);
  EXPECT_THROW(rename(o, unknown), ValidationError);
  RenamingMap twice;
  twice.add(nC, nE);
  EXPECT_THROW(twice.add(nC, Name::plain("F")), ValidationError);
  RenamingMap swap;
  swap.add(nC, nD);
  swap.add(nD, nC);
  EXPECT_EQ(rename(o, swap).constraints(), (ConstraintSet{{D, C}}));
}
