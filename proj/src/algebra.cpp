#include "lwo/algebra.hpp"

#include <algorithm>

#include "lwo/error.hpp"
#include "lwo/graph.hpp"
#include "lwo/minimize.hpp"
#include "lwo/reason.hpp"

namespace lwo {

Ontology unite(const Ontology& a, const Ontology& b) {
  ConstraintSet all = a.constraints();
  all.insert(b.constraints().begin(), b.constraints().end());
  return Ontology(merge(a.vocabulary(), b.vocabulary()), minimizeConstraints(all));
}

DeprecationResult deprecate(const Ontology& o, const ConstraintSet& psi) {
  DeprecationResult r;
  ConstraintSet kept = o.constraints();
  for (const auto& p : psi)
    if (kept.erase(p) == 0) r.absent.push_back(p);
  r.ontology = Ontology(o.vocabulary(), minimizeConstraints(kept));
  return r;
}

namespace {

bool usesOnly(const Concept& c, const Vocabulary& w) {
  const auto& b = c.basic();
  if (b.isAtomic()) return w.concepts.count(b.conceptName()) != 0;
  if (b.isAtLeast()) return w.roles.count(b.role().role) != 0;
  return true;
}

bool usesOnly(const Inclusion& i, const Vocabulary& w) { return usesOnly(i.lhs, w) && usesOnly(i.rhs, w); }

void requireSubVocabulary(const Vocabulary& w, const Vocabulary& v) {
  std::string unknown;
  for (const auto& n : w.concepts)
    if (!v.concepts.count(n)) unknown += (unknown.empty() ? "" : ", ") + n.display();
  for (const auto& n : w.roles)
    if (!v.roles.count(n)) unknown += (unknown.empty() ? "" : ", ") + n.display();
  if (!unknown.empty()) throw ValidationError("not in the ontology's vocabulary: " + unknown);
}

// Descriptions over which the difference result is checked: everything either
// side mentions, every atomic concept, and each role restriction up to one
// past the largest count in use, so every count interval is represented.
std::set<Concept> probeUniverse(const ConstraintSet& a, const ConstraintSet& b) {
  std::set<Concept> u = occurringDescriptions(a);
  u.merge(occurringDescriptions(b));
  std::map<Name, std::uint64_t> maxCount;
  std::set<Concept> extra;
  for (const auto& c : u) {
    const auto& basic = c.basic();
    if (basic.isAtomic()) extra.insert(Concept::atomic(basic.conceptName()));
    if (basic.isAtLeast()) {
      auto& m = maxCount[basic.role().role];
      m = std::max(m, basic.count());
    }
  }
  for (const auto& [role, top] : maxCount)
    for (std::uint64_t k = 1; k <= top + 1; ++k)
      for (bool inverse : {false, true}) extra.insert(Concept::atLeast(k, RoleDescription{role, inverse}));
  u.merge(extra);
  u.insert(Concept::bottom());
  std::set<Concept> negs;
  for (const auto& c : u) negs.insert(complement(c));
  u.merge(negs);
  return u;
}

}  // namespace

Ontology project(const Ontology& o, const Vocabulary& w) {
  requireSubVocabulary(w, o.vocabulary());
  // Tags of the full graph are kept: emptiness derived through names outside
  // w must survive the label filter.
  const ConstraintGraph closed = transitiveClosure(buildGraph(o.constraints()));
  const ConstraintGraph kept = closed.filterLabels([&](const Concept& c) { return usesOnly(c, w); });
  return Ontology(w, generateConstraints(minimizeGraph(kept)));
}

std::set<Concept> closureDelta(const ConstraintSet& a, const ConstraintSet& b) {
  const auto da = occurringDescriptions(a);
  const auto db = occurringDescriptions(b);
  std::set<Concept> out;
  std::set_symmetric_difference(da.begin(), da.end(), db.begin(), db.end(),
                                std::inserter(out, out.end()));
  return out;
}

Ontology intersect(const Ontology& a, const Ontology& b) {
  const Vocabulary shared = intersect(a.vocabulary(), b.vocabulary());
  const auto delta = closureDelta(a.constraints(), b.constraints());
  const ConstraintGraph g1 = buildGraph(a.constraints(), delta);
  const ConstraintGraph g2 = buildGraph(b.constraints(), delta);
  const BitMatrix r1 = reflexiveReach(g1);
  const BitMatrix r2 = reflexiveReach(g2);

  ConstraintSet common;
  auto add = [&](const Concept& e, const Concept& f) {
    Inclusion q{e, f};
    if (e != f && isExtended(q) && !isTautology(q)) common.insert(q);
  };
  auto reach2 = [&](int x, int y) { return r2.test(static_cast<std::size_t>(x), static_cast<std::size_t>(y)); };

  for (int m = 0; m < static_cast<int>(g1.size()); ++m) {
    if (g1.kind(m) != NodeKind::Positive) continue;
    for (const auto& e : g1.node(m).labels) {
      const int e2 = g2.nodeOf(e);
      if (g1.node(m).bottom) {
        if (g2.node(e2).bottom) add(e, Concept::bottom());
        for (int k = 0; k < static_cast<int>(g2.size()); ++k) {
          if (g2.node(k).top)
            for (const auto& f : g2.node(k).labels) add(e, f);
          if (reach2(e2, k))
            for (const auto& f : g2.node(k).labels) add(e, f);
        }
        continue;
      }
      for (int n = 0; n < static_cast<int>(g1.size()); ++n) {
        if (!r1.test(static_cast<std::size_t>(m), static_cast<std::size_t>(n))) continue;
        for (const auto& f : g1.node(n).labels) {
          if (f == e) continue;
          const int f2 = g2.nodeOf(f);
          if (g2.node(e2).bottom || g2.node(f2).top || reach2(e2, f2)) add(e, f);
        }
      }
    }
  }

  ConstraintSet filtered;
  for (const auto& q : common)
    if (usesOnly(q, shared)) filtered.insert(q);
  return Ontology(shared, minimizeConstraints(filtered));
}

namespace {

class DifferencePruner {
 public:
  DifferencePruner(const ConstraintSet& s1, const ConstraintSet& s2)
      : delta_(closureDelta(s1, s2)),
        g1_(buildGraph(s1, delta_)),
        g2_(buildGraph(s2, delta_)),
        h_(transitiveClosure(g1_)) {}

  ConstraintGraph run() {
    const int n2 = static_cast<int>(g2_.size());
    for (int m = 0; m < n2; ++m) {
      if (g2_.node(m).bottom)
        for (const auto& e : g2_.node(m).labels)
          if (auto k = h_.find(e)) dropLeaving(*k);
      if (g2_.node(m).top)
        for (const auto& f : g2_.node(m).labels)
          if (auto l = h_.find(f)) dropEntering(*l);
    }

    const BitMatrix r2 = reflexiveReach(g2_);
    std::vector<Inclusion> forbidden;
    for (int m = 0; m < n2; ++m) {
      if (g2_.kind(m) != NodeKind::Positive) continue;
      for (int n = 0; n < n2; ++n) {
        if (!r2.test(static_cast<std::size_t>(m), static_cast<std::size_t>(n))) continue;
        for (const auto& e : g2_.node(m).labels)
          for (const auto& f : g2_.node(n).labels) {
            Inclusion q{e, f};
            if (e != f && !f.isTop() && !isTautology(q)) forbidden.push_back(q);
          }
      }
    }
    std::sort(forbidden.begin(), forbidden.end());

    const BitMatrix r1 = reflexiveReach(g1_);
    for (const auto& q : forbidden) {
      const int k = g1_.nodeOf(q.lhs);
      const int l = g1_.nodeOf(q.rhs);
      if (g1_.node(k).bottom) dropLeaving(k);
      if (g1_.node(l).top) dropEntering(l);
      if (r1.test(static_cast<std::size_t>(k), static_cast<std::size_t>(l))) separate(k, l);
    }
    h_.retag();
    return h_;
  }

 private:
  void dropLeaving(int k) {
    for (int w : h_.successors(k))
      if (h_.arc(k, w) == ArcKind::Plain) h_.removeArc(k, w);
  }
  void dropEntering(int l) {
    for (int u : h_.predecessors(l))
      if (h_.arc(u, l) == ArcKind::Plain) h_.removeArc(u, l);
  }

  // Depth-first search in ascending successor order; the first path found
  // is the lexicographically least one.
  std::vector<int> leastPath(int from, int to) const {
    std::vector<char> seen(h_.size(), 0);
    std::vector<int> path{from};
    std::vector<std::vector<int>> pending{h_.successors(from)};
    std::vector<std::size_t> cursor{0};
    seen[static_cast<std::size_t>(from)] = 1;
    while (!path.empty()) {
      auto& next = cursor.back();
      if (next == pending.back().size()) {
        path.pop_back();
        pending.pop_back();
        cursor.pop_back();
        continue;
      }
      const int w = pending.back()[next++];
      if (w == to) {
        path.push_back(w);
        return path;
      }
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      pending.push_back(h_.successors(w));
      cursor.push_back(0);
    }
    return {};
  }

  // Removes the final removable arc of the least remaining path until no
  // path is left, or until only tautological arcs remain on it.
  void separate(int k, int l) {
    if (k == l) return;
    for (;;) {
      const auto path = leastPath(k, l);
      if (path.empty()) return;
      bool removed = false;
      for (std::size_t i = path.size() - 1; i > 0 && !removed; --i)
        if (h_.arc(path[i - 1], path[i]) == ArcKind::Plain) {
          h_.removeArc(path[i - 1], path[i]);
          removed = true;
        }
      if (!removed) return;
    }
  }

  std::set<Concept> delta_;
  ConstraintGraph g1_;
  ConstraintGraph g2_;
  ConstraintGraph h_;
};

// Drops constraints until the result implies none of the forbidden
// inclusions. Candidates are tried in reverse canonical order.
ConstraintSet repair(ConstraintSet result, const std::vector<Inclusion>& forbidden,
                     const std::set<Concept>& universe) {
  for (;;) {
    const Reasoner current(result, universe);
    auto hit = std::find_if(forbidden.begin(), forbidden.end(),
                            [&](const Inclusion& q) { return current.implies(q); });
    if (hit == forbidden.end()) return result;
    const Inclusion q = *hit;

    bool fixed = false;
    for (auto it = result.rbegin(); it != result.rend(); ++it) {
      ConstraintSet trial = result;
      trial.erase(*it);
      if (!implies(trial, q)) {
        result = std::move(trial);
        fixed = true;
        break;
      }
    }
    if (fixed) continue;

    ConstraintSet trial = result;
    std::vector<Inclusion> removed;
    for (auto it = result.rbegin(); it != result.rend(); ++it) {
      trial.erase(*it);
      removed.push_back(*it);
      if (!implies(trial, q)) break;
    }
    for (const auto& c : removed) {
      trial.insert(c);
      if (implies(trial, q)) trial.erase(c);
    }
    result = std::move(trial);
  }
}

}  // namespace

Ontology difference(const Ontology& a, const Ontology& b) {
  const ConstraintSet& s1 = a.constraints();
  const ConstraintSet& s2 = b.constraints();
  ConstraintSet result = generateConstraints(minimizeGraph(DifferencePruner(s1, s2).run()));

  const auto universe = probeUniverse(s1, s2);
  const Reasoner r1(s1, universe);
  const Reasoner r2(s2, universe);
  std::vector<Inclusion> forbidden;
  for (const auto& e : universe) {
    if (!e.isPositiveProper()) continue;
    for (const auto& f : universe) {
      Inclusion q{e, f};
      if (f.isTop() || isTautology(q)) continue;
      if (r2.implies(q) && r1.implies(q)) forbidden.push_back(q);
    }
  }
  result = minimizeConstraints(repair(std::move(result), forbidden, universe));
  return Ontology(a.vocabulary(), std::move(result));
}

Ontology closedFragment(const Ontology& o, const Vocabulary& w) {
  const Ontology open = project(o, w);
  ConstraintSet phi;
  for (const auto& c : o.vocabulary().concepts)
    if (!w.concepts.count(c)) phi.insert(Inclusion{Concept::atomic(c), Concept::bottom()});
  for (const auto& r : o.vocabulary().roles)
    if (!w.roles.count(r)) phi.insert(Inclusion{Concept::exists(r), Concept::bottom()});
  return unite(Ontology(o.vocabulary(), open.constraints()), Ontology(o.vocabulary(), phi));
}

void RenamingMap::add(const Name& from, const Name& to) {
  if (!pairs_.emplace(from, to).second)
    throw ValidationError("'" + from.display() + "' is renamed twice");
}

const Name& RenamingMap::apply(const Name& n) const {
  auto it = pairs_.find(n);
  return it == pairs_.end() ? n : it->second;
}

namespace {

Concept renameConcept(const Concept& c, const RenamingMap& m) {
  const auto& b = c.basic();
  BasicConcept nb = b;
  if (b.isAtomic()) nb = BasicConcept::atomic(m.apply(b.conceptName()));
  if (b.isAtLeast()) nb = BasicConcept::atLeast(b.count(), RoleDescription{m.apply(b.role().role), b.role().inverse});
  return c.isNegated() ? Concept::negated(nb) : Concept::positive(nb);
}

}  // namespace

Ontology rename(const Ontology& o, const RenamingMap& m) {
  const Vocabulary& v = o.vocabulary();
  for (const auto& [from, to] : m.pairs())
    if (!v.contains(from)) throw ValidationError("cannot rename '" + from.display() + "': not in the vocabulary");

  Vocabulary renamed;
  for (const auto& c : v.concepts) renamed.concepts.insert(m.apply(c));
  for (const auto& r : v.roles) renamed.roles.insert(m.apply(r));
  if (renamed.concepts.size() != v.concepts.size() || renamed.roles.size() != v.roles.size())
    throw ValidationError("renaming maps two names to the same target");
  for (const auto& c : renamed.concepts)
    if (renamed.roles.count(c))
      throw ValidationError("renaming turns '" + c.display() + "' into both a concept and a role");

  ConstraintSet constraints;
  for (const auto& i : o.constraints())
    constraints.insert(Inclusion{renameConcept(i.lhs, m), renameConcept(i.rhs, m)});
  return Ontology(std::move(renamed), std::move(constraints));
}

}  // namespace lwo
