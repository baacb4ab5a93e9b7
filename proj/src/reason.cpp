#include "lwo/reason.hpp"

namespace lwo {

namespace {

bool decide(const ConstraintGraph& g, const BitMatrix& reach, bool inconsistent, const Inclusion& q) {
  if (inconsistent) return true;
  const int e = g.nodeOf(q.lhs);
  const int f = g.nodeOf(q.rhs);
  return g.node(e).bottom || g.node(f).top ||
         reach.test(static_cast<std::size_t>(e), static_cast<std::size_t>(f));
}

bool topIsEmpty(const ConstraintGraph& g) {
  auto t = g.find(Concept::top());
  return t && g.node(*t).bottom;
}

}  // namespace

bool implies(const ConstraintSet& sigma, const Inclusion& q) {
  ConstraintGraph g = buildGraph(sigma, {q.lhs, q.rhs});
  if (topIsEmpty(g)) return true;
  const int e = g.nodeOf(q.lhs);
  const int f = g.nodeOf(q.rhs);
  return g.node(e).bottom || g.node(f).top || reaches(g, q.lhs, q.rhs);
}

Reasoner::Reasoner(ConstraintSet sigma, const std::set<Concept>& omega)
    : sigma_(std::move(sigma)), graph_(buildGraph(sigma_, omega)), reach_(reflexiveReach(graph_)) {
  inconsistent_ = topIsEmpty(graph_);
}

bool Reasoner::implies(const Inclusion& q) const {
  if (!graph_.find(q.lhs) || !graph_.find(q.rhs)) return lwo::implies(sigma_, q);
  return decide(graph_, reach_, inconsistent_, q);
}

bool equivalentTheories(const ConstraintSet& a, const ConstraintSet& b) {
  const Reasoner ra(a, occurringDescriptions(b));
  for (const auto& s : b)
    if (!ra.implies(s)) return false;
  const Reasoner rb(b, occurringDescriptions(a));
  for (const auto& s : a)
    if (!rb.implies(s)) return false;
  return true;
}

ConstraintSet allConsequences(const ConstraintSet& sigma) {
  const Reasoner r(sigma);
  const auto& g = r.graph();
  std::vector<Concept> labels;
  for (int v = 0; v < static_cast<int>(g.size()); ++v)
    for (const auto& c : g.node(v).labels) labels.push_back(c);

  ConstraintSet out;
  for (const auto& e : labels) {
    if (!e.isPositiveProper() && !e.isTop()) continue;
    for (const auto& f : labels) {
      Inclusion q{e, f};
      if (isTautology(q) || !isExtended(q)) continue;
      if (r.implies(q)) out.insert(q);
    }
  }
  return out;
}

std::set<Concept> emptyDescriptions(const ConstraintSet& sigma) {
  const ConstraintGraph g = buildGraph(sigma);
  std::set<Concept> out;
  for (int v = 0; v < static_cast<int>(g.size()); ++v) {
    if (!g.node(v).bottom) continue;
    for (const auto& c : g.node(v).labels)
      if (c.isPositiveProper()) out.insert(c);
  }
  return out;
}

}  // namespace lwo
