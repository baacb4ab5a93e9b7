#include "lwo/minimize.hpp"

#include <algorithm>
#include <map>

namespace lwo {

ConstraintGraph minimizeGraph(const ConstraintGraph& g) {
  const Adjacency adj = g.adjacency();
  const BitMatrix reach = reachability(adj);
  const auto redundant = redundantArcs(adj, reach);
  ConstraintGraph h = g;
  for (std::size_t v = 0; v < adj.size(); ++v)
    for (std::size_t k = 0; k < adj[v].size(); ++k) {
      const int w = adj[v][k];
      if (redundant[v][k] && g.arc(static_cast<int>(v), w) == ArcKind::Plain)
        h.removeArc(static_cast<int>(v), w);
    }
  return h;
}

namespace {

// Atomic labels first, then each role-description group in descending count,
// so that consecutive members of a group are linked by valid inclusions.
std::vector<Concept> cycleOrder(std::vector<Concept> labels) {
  std::stable_sort(labels.begin(), labels.end(), [](const Concept& a, const Concept& b) {
    const auto& x = a.basic();
    const auto& y = b.basic();
    if (x.isAtLeast() && y.isAtLeast() && x.role() == y.role()) return x.count() > y.count();
    return a < b;
  });
  return labels;
}

class Generator {
 public:
  explicit Generator(const ConstraintGraph& h) : h_(h), processed_(h.size() * h.size(), 0) {}

  ConstraintSet run() {
    if (auto t = h_.find(Concept::top()); t && h_.node(*t).bottom)
      return {Inclusion{Concept::top(), Concept::bottom()}};
    collectBottomWitnesses();
    const int n = static_cast<int>(h_.size());
    for (int v = 0; v < n; ++v) {
      if (h_.kind(v) == NodeKind::Positive) emitNode(v);
      if (h_.kind(v) == NodeKind::Negated && h_.node(v).bottom) emitTotal(v);
    }
    // Positive targets first; disjointness arcs afterwards, visiting sources
    // from the largest label down.
    for (int v = 0; v < n; ++v)
      if (emitsArcs(v)) emitArcs(v, NodeKind::Positive);
    for (int v = n - 1; v >= 0; --v)
      if (emitsArcs(v)) emitArcs(v, NodeKind::Negated);
    return out_;
  }

 private:
  bool emitsArcs(int v) const {
    return h_.kind(v) == NodeKind::Positive && !h_.node(v).bottom && !h_.node(v).top;
  }

  char& processed(int v, int w) {
    return processed_[static_cast<std::size_t>(v) * h_.size() + static_cast<std::size_t>(w)];
  }

  bool roleEmpty(const Name& role) const {
    for (bool inverse : {false, true})
      if (auto v = h_.find(Concept::exists(role, inverse)); v && h_.node(*v).bottom) return true;
    return false;
  }

  // For each role direction, the smallest count among bottom at-least
  // labels; the other bottom restrictions follow from it.
  void collectBottomWitnesses() {
    for (int v = 0; v < static_cast<int>(h_.size()); ++v) {
      if (!h_.node(v).bottom || h_.kind(v) != NodeKind::Positive) continue;
      for (const auto& c : h_.node(v).labels) {
        if (!c.basic().isAtLeast()) continue;
        auto [it, inserted] = minBottom_.emplace(c.basic().role(), c.basic().count());
        if (!inserted) it->second = std::min(it->second, c.basic().count());
      }
    }
  }

  bool emitsBottom(const Concept& c) const {
    const auto& b = c.basic();
    if (!b.isAtLeast()) return true;
    const Name& role = b.role().role;
    if (roleEmpty(role)) {
      // One (>= 1 P) sub Bottom covers both directions and every count.
      Concept direct = Concept::exists(role, false);
      Concept witness = h_.find(direct) ? direct : Concept::exists(role, true);
      return c == witness;
    }
    return b.count() == minBottom_.at(b.role());
  }

  void emitNode(int v) {
    const GraphNode& node = h_.node(v);
    if (node.bottom) {
      for (const auto& c : node.labels)
        if (emitsBottom(c)) out_.insert(Inclusion{c, Concept::bottom()});
      return;
    }
    if (node.top || node.labels.size() < 2) return;
    const auto order = cycleOrder(node.labels);
    for (std::size_t i = 0; i < order.size(); ++i) {
      Inclusion link{order[i], order[(i + 1) % order.size()]};
      if (!isTautology(link)) out_.insert(link);
    }
  }

  // A negated bottom node not b means Top sub b.
  void emitTotal(int v) {
    std::map<RoleDescription, std::uint64_t> maxCount;
    for (const auto& c : h_.node(v).labels)
      if (c.basic().isAtLeast()) {
        auto& m = maxCount[c.basic().role()];
        m = std::max(m, c.basic().count());
      }
    for (const auto& c : h_.node(v).labels) {
      const auto& b = c.basic();
      if (b.isAtLeast() && b.count() != maxCount[b.role()]) continue;
      out_.insert(Inclusion{Concept::top(), complement(c)});
    }
  }

  void emitArcs(int v, NodeKind targetKind) {
    for (int w : h_.successors(v)) {
      if (h_.kind(w) != targetKind || processed(v, w)) continue;
      processed(v, w) = 1;
      processed(h_.dual(w), h_.dual(v)) = 1;
      if (h_.arc(v, w) == ArcKind::Tautological) continue;
      if (h_.node(w).bottom || h_.node(w).top) continue;
      out_.insert(Inclusion{h_.node(v).labels.front(), h_.node(w).labels.front()});
    }
  }

  const ConstraintGraph& h_;
  std::vector<char> processed_;
  std::map<RoleDescription, std::uint64_t> minBottom_;
  ConstraintSet out_;
};

}  // namespace

ConstraintSet generateConstraints(const ConstraintGraph& h) { return Generator(h).run(); }

ConstraintSet minimizeConstraints(const ConstraintSet& sigma) {
  return generateConstraints(minimizeGraph(buildGraph(sigma)));
}

}  // namespace lwo
