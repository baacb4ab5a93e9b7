#include "lwo/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lwo/error.hpp"

namespace lwo {

NodeKind ConstraintGraph::kind(int v) const {
  const Concept& c = node(v).labels.front();
  if (c.isBottom()) return NodeKind::Bottom;
  if (c.isTop()) return NodeKind::Top;
  return c.isPositive() ? NodeKind::Positive : NodeKind::Negated;
}

std::optional<int> ConstraintGraph::find(const Concept& c) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), c,
                             [](const auto& entry, const Concept& key) { return entry.first < key; });
  if (it == index_.end() || it->first != c) return std::nullopt;
  return it->second;
}

int ConstraintGraph::nodeOf(const Concept& c) const {
  if (auto v = find(c)) return *v;
  throw Error("no node of the constraint graph is labelled '" + toString(c) + "'");
}

std::vector<int> ConstraintGraph::successors(int v) const {
  std::vector<int> out;
  for (int w = 0; w < static_cast<int>(size()); ++w)
    if (hasArc(v, w)) out.push_back(w);
  return out;
}

std::vector<int> ConstraintGraph::predecessors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < static_cast<int>(size()); ++u)
    if (hasArc(u, v)) out.push_back(u);
  return out;
}

std::vector<std::pair<int, int>> ConstraintGraph::arcList() const {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(size());
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (hasArc(v, w)) out.emplace_back(v, w);
  return out;
}

std::size_t ConstraintGraph::arcCount() const {
  return static_cast<std::size_t>(
      std::count_if(arcs_.begin(), arcs_.end(), [](std::uint8_t a) { return a != 0; }));
}

Adjacency ConstraintGraph::adjacency() const {
  Adjacency adj(size());
  for (int v = 0; v < static_cast<int>(size()); ++v) adj[static_cast<std::size_t>(v)] = successors(v);
  return adj;
}

void ConstraintGraph::removeArc(int from, int to) {
  setArc(from, to, ArcKind::None);
  setArc(dual(to), dual(from), ArcKind::None);
}

bool tautologicalPair(const GraphNode& from, const GraphNode& to) {
  for (const auto& e : from.labels) {
    if (!e.basic().isAtLeast()) continue;
    for (const auto& f : to.labels) {
      if (!f.basic().isAtLeast() || e == f) continue;
      if (isTautology(Inclusion{e, f})) return true;
    }
  }
  return false;
}

ConstraintGraph ConstraintGraph::assemble(std::vector<GraphNode> nodes, std::vector<int> dual,
                                          const std::vector<std::pair<int, int>>& arcs) {
  ConstraintGraph g;
  g.nodes_ = std::move(nodes);
  g.dual_ = std::move(dual);
  g.arcs_.assign(g.nodes_.size() * g.nodes_.size(), 0);
  for (auto [v, w] : arcs) {
    if (v == w) continue;
    bool taut = tautologicalPair(g.node(v), g.node(w));
    g.setArc(v, w, taut ? ArcKind::Tautological : ArcKind::Plain);
  }
  for (std::size_t v = 0; v < g.nodes_.size(); ++v)
    for (const auto& c : g.nodes_[v].labels) g.index_.emplace_back(c, static_cast<int>(v));
  std::sort(g.index_.begin(), g.index_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return g;
}

ConstraintGraph ConstraintGraph::filterLabels(const std::function<bool(const Concept&)>& keep) const {
  const int n = static_cast<int>(size());
  std::vector<int> remap(size(), -1);
  std::vector<GraphNode> kept;
  for (int v = 0; v < n; ++v) {
    GraphNode copy = node(v);
    std::erase_if(copy.labels, [&](const Concept& c) { return !keep(c); });
    if (copy.labels.empty()) continue;
    remap[static_cast<std::size_t>(v)] = static_cast<int>(kept.size());
    kept.push_back(std::move(copy));
  }
  std::vector<int> dual(kept.size(), -1);
  for (int v = 0; v < n; ++v) {
    int nv = remap[static_cast<std::size_t>(v)];
    if (nv < 0) continue;
    int nd = remap[static_cast<std::size_t>(this->dual(v))];
    if (nd < 0) throw Error("label filter must keep complements together");
    dual[static_cast<std::size_t>(nv)] = nd;
  }
  std::vector<std::pair<int, int>> arcs;
  for (auto [v, w] : arcList()) {
    int a = remap[static_cast<std::size_t>(v)];
    int b = remap[static_cast<std::size_t>(w)];
    if (a >= 0 && b >= 0) arcs.emplace_back(a, b);
  }
  return assemble(std::move(kept), std::move(dual), arcs);
}

namespace {

// Iterative Tarjan; returns the component id of each vertex.
std::vector<int> stronglyConnectedComponents(const Adjacency& succ, int& count) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> index(succ.size(), -1), low(succ.size(), 0), comp(succ.size(), -1);
  std::vector<char> onStack(succ.size(), 0);
  std::vector<int> stack;
  struct Frame {
    int v;
    std::size_t next;
  };
  std::vector<Frame> call;
  int counter = 0;
  count = 0;
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      const auto v = static_cast<std::size_t>(f.v);
      if (f.next == 0 && index[v] < 0) {
        index[v] = low[v] = counter++;
        stack.push_back(f.v);
        onStack[v] = 1;
      }
      if (f.next < succ[v].size()) {
        const auto w = static_cast<std::size_t>(succ[v][f.next++]);
        if (index[w] < 0) {
          call.push_back({static_cast<int>(w), 0});
        } else if (onStack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          onStack[static_cast<std::size_t>(w)] = 0;
          comp[static_cast<std::size_t>(w)] = count;
        } while (w != f.v);
        ++count;
      }
      int finished = f.v;
      call.pop_back();
      if (!call.empty()) {
        const auto parent = static_cast<std::size_t>(call.back().v);
        low[parent] = std::min(low[parent], low[static_cast<std::size_t>(finished)]);
      }
    }
  }
  return comp;
}

std::set<Concept> graphUniverse(const ConstraintSet& sigma, const std::set<Concept>& omega) {
  std::set<Concept> u = occurringDescriptions(sigma);
  u.insert(omega.begin(), omega.end());
  std::set<Concept> extra;
  for (const auto& c : u) {
    const auto& b = c.basic();
    if (b.isAtomic()) extra.insert(Concept::atomic(b.conceptName()));
    if (b.isAtLeast()) {
      extra.insert(Concept::exists(b.role().role, false));
      extra.insert(Concept::exists(b.role().role, true));
    }
  }
  u.merge(extra);
  std::set<Concept> complements;
  for (const auto& c : u) complements.insert(complement(c));
  u.merge(complements);
  return u;
}

}  // namespace

ConstraintGraph buildGraph(const ConstraintSet& sigma, const std::set<Concept>& omega) {
  const std::vector<Concept> concepts = [&] {
    auto u = graphUniverse(sigma, omega);
    return std::vector<Concept>(u.begin(), u.end());
  }();
  const int n = static_cast<int>(concepts.size());
  auto indexOf = [&](const Concept& c) {
    return static_cast<int>(std::lower_bound(concepts.begin(), concepts.end(), c) - concepts.begin());
  };

  std::vector<std::set<int>> succSets(concepts.size());
  auto addWithDual = [&](int a, int b) {
    succSets[static_cast<std::size_t>(a)].insert(b);
    succSets[static_cast<std::size_t>(indexOf(complement(concepts[static_cast<std::size_t>(b)])))]
        .insert(indexOf(complement(concepts[static_cast<std::size_t>(a)])));
  };
  for (const auto& i : sigma) addWithDual(indexOf(i.lhs), indexOf(i.rhs));

  // Tautological arcs between existing at-least restrictions.
  std::map<RoleDescription, std::vector<int>> byRole;
  for (int v = 0; v < n; ++v) {
    const auto& c = concepts[static_cast<std::size_t>(v)];
    if (c.isPositive() && c.basic().isAtLeast()) byRole[c.basic().role()].push_back(v);
  }
  for (const auto& [role, members] : byRole)
    for (int hi : members)
      for (int lo : members)
        if (concepts[static_cast<std::size_t>(lo)].basic().count() <
            concepts[static_cast<std::size_t>(hi)].basic().count())
          addWithDual(hi, lo);

  Adjacency succ(concepts.size());
  for (std::size_t v = 0; v < concepts.size(); ++v) succ[v].assign(succSets[v].begin(), succSets[v].end());

  int compCount = 0;
  std::vector<int> comp = stronglyConnectedComponents(succ, compCount);

  // Number components by their least member so that output is canonical.
  std::vector<int> least(static_cast<std::size_t>(compCount), n);
  for (int v = 0; v < n; ++v) {
    auto& l = least[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
    l = std::min(l, v);
  }
  std::vector<int> order(static_cast<std::size_t>(compCount));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return least[static_cast<std::size_t>(a)] < least[static_cast<std::size_t>(b)];
  });
  std::vector<int> rank(static_cast<std::size_t>(compCount));
  for (int r = 0; r < compCount; ++r) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;

  std::vector<GraphNode> nodes(static_cast<std::size_t>(compCount));
  std::vector<int> nodeOf(concepts.size());
  for (int v = 0; v < n; ++v) {
    int r = rank[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
    nodeOf[static_cast<std::size_t>(v)] = r;
    nodes[static_cast<std::size_t>(r)].labels.push_back(concepts[static_cast<std::size_t>(v)]);
  }
  std::vector<int> dual(nodes.size());
  for (std::size_t r = 0; r < nodes.size(); ++r)
    dual[r] = nodeOf[static_cast<std::size_t>(indexOf(complement(nodes[r].labels.front())))];

  std::vector<std::pair<int, int>> arcs;
  for (int v = 0; v < n; ++v)
    for (int w : succ[static_cast<std::size_t>(v)]) {
      int a = nodeOf[static_cast<std::size_t>(v)];
      int b = nodeOf[static_cast<std::size_t>(w)];
      if (a != b) arcs.emplace_back(a, b);
    }

  ConstraintGraph g = ConstraintGraph::assemble(std::move(nodes), std::move(dual), arcs);
  g.retag();
  return g;
}

BitMatrix reflexiveReach(const ConstraintGraph& g) {
  BitMatrix r = reachability(g.adjacency());
  for (std::size_t v = 0; v < g.size(); ++v) r.set(v, v);
  return r;
}

void ConstraintGraph::retag() {
  const int n = static_cast<int>(size());
  const BitMatrix reach = reflexiveReach(*this);

  // Mark the dual of every reachable node; a hit on a reachable node means
  // the source reaches some b and its complement.
  std::vector<char> bottom(size(), 0);
  BitMatrix dualReach(size());
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m)
      if (reach.test(static_cast<std::size_t>(k), static_cast<std::size_t>(m)))
        dualReach.set(static_cast<std::size_t>(k), static_cast<std::size_t>(dual(m)));
  }
  for (int k = 0; k < n; ++k) {
    const std::uint64_t* a = reach.row(static_cast<std::size_t>(k));
    const std::uint64_t* b = dualReach.row(static_cast<std::size_t>(k));
    for (std::size_t w = 0; w < reach.words(); ++w)
      if (a[w] & b[w]) {
        bottom[static_cast<std::size_t>(k)] = 1;
        break;
      }
    if (kind(k) == NodeKind::Bottom) bottom[static_cast<std::size_t>(k)] = 1;
  }

  // Partner nodes for the role-emptiness coupling.
  std::vector<std::vector<int>> partners(size());
  for (int v = 0; v < n; ++v)
    for (const auto& c : node(v).labels) {
      if (!c.isPositive() || !c.basic().isAtLeast() || c.basic().count() != 1) continue;
      auto role = c.basic().role();
      if (auto p = find(Concept::exists(role.role, !role.inverse)))
        partners[static_cast<std::size_t>(v)].push_back(*p);
    }

  Adjacency pred(size());
  for (auto [v, w] : arcList()) pred[static_cast<std::size_t>(w)].push_back(v);

  std::vector<int> work;
  for (int v = 0; v < n; ++v)
    if (bottom[static_cast<std::size_t>(v)]) work.push_back(v);
  while (!work.empty()) {
    int v = work.back();
    work.pop_back();
    auto mark = [&](int u) {
      if (!bottom[static_cast<std::size_t>(u)]) {
        bottom[static_cast<std::size_t>(u)] = 1;
        work.push_back(u);
      }
    };
    for (int u : pred[static_cast<std::size_t>(v)]) mark(u);
    for (int u : partners[static_cast<std::size_t>(v)]) mark(u);
  }

  for (int v = 0; v < n; ++v) {
    nodes_[static_cast<std::size_t>(v)].bottom = bottom[static_cast<std::size_t>(v)] != 0;
    nodes_[static_cast<std::size_t>(v)].top = bottom[static_cast<std::size_t>(dual(v))] != 0;
  }
}

ConstraintGraph tagGraph(ConstraintGraph g) {
  g.retag();
  return g;
}

ConstraintGraph transitiveClosure(const ConstraintGraph& g) {
  const BitMatrix reach = reachability(g.adjacency());
  std::vector<GraphNode> nodes;
  std::vector<int> dual;
  for (int v = 0; v < static_cast<int>(g.size()); ++v) {
    nodes.push_back(g.node(v));
    dual.push_back(g.dual(v));
  }
  std::vector<std::pair<int, int>> arcs;
  for (std::size_t v = 0; v < g.size(); ++v)
    for (std::size_t w = 0; w < g.size(); ++w)
      if (v != w && reach.test(v, w)) arcs.emplace_back(static_cast<int>(v), static_cast<int>(w));
  return ConstraintGraph::assemble(std::move(nodes), std::move(dual), arcs);
}

bool reaches(const ConstraintGraph& g, const Concept& e, const Concept& f) {
  const int from = g.nodeOf(e);
  const int to = g.nodeOf(f);
  if (from == to) return true;
  if (f.isBottom() && g.node(from).bottom) return true;
  if (e.isTop() && g.node(to).top) return true;
  // Breadth-first search; a single query does not need the full closure.
  std::vector<char> seen(g.size(), 0);
  std::vector<int> queue{from};
  seen[static_cast<std::size_t>(from)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int w : g.successors(queue[head])) {
      if (w == to) return true;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return false;
}

std::vector<std::string> checkInvariants(const ConstraintGraph& g, bool extended) {
  std::vector<std::string> problems;
  const int n = static_cast<int>(g.size());
  auto name = [&](int v) { return "node " + std::to_string(v) + " {" + toString(g.node(v).labels.front()) + ", ...}"; };

  try {
    (void)heights(g.adjacency());
  } catch (const Error&) {
    problems.push_back("graph has a cycle");
  }

  std::set<Concept> seen;
  for (int v = 0; v < n; ++v) {
    const auto& labels = g.node(v).labels;
    if (labels.empty()) {
      problems.push_back("node " + std::to_string(v) + " has no label");
      continue;
    }
    for (const auto& c : labels)
      if (!seen.insert(c).second) problems.push_back("label '" + toString(c) + "' appears twice");

    const NodeKind k = g.kind(v);
    for (const auto& c : labels) {
      NodeKind ck = c.isBottom() ? NodeKind::Bottom
                    : c.isTop()  ? NodeKind::Top
                    : c.isPositive() ? NodeKind::Positive
                                     : NodeKind::Negated;
      if (ck != k) problems.push_back(name(v) + " mixes label families");
    }

    const int d = g.dual(v);
    if (d < 0 || d >= n || g.dual(d) != v) {
      problems.push_back(name(v) + " has no consistent dual");
      continue;
    }
    for (const auto& c : labels) {
      auto where = g.find(complement(c));
      if (!where || *where != d)
        problems.push_back("complement of '" + toString(c) + "' does not label the dual node");
    }
    if (g.node(v).top != g.node(d).bottom) problems.push_back(name(v) + " has a top tag inconsistent with its dual");
  }

  for (auto [v, w] : g.arcList()) {
    if (!g.hasArc(g.dual(w), g.dual(v)))
      problems.push_back("arc " + std::to_string(v) + "->" + std::to_string(w) + " has no dual");
    const NodeKind a = g.kind(v);
    const NodeKind b = g.kind(w);
    bool ok = (a == NodeKind::Positive &&
               (b == NodeKind::Positive || b == NodeKind::Bottom || b == NodeKind::Negated)) ||
              (a == NodeKind::Negated && b == NodeKind::Negated) ||
              (a == NodeKind::Top && b == NodeKind::Negated);
    if (extended)
      ok = ok || (a == NodeKind::Top && (b == NodeKind::Positive || b == NodeKind::Bottom)) ||
           (a == NodeKind::Negated && b == NodeKind::Bottom);
    if (!ok)
      problems.push_back("arc " + std::to_string(v) + "->" + std::to_string(w) +
                         " falls outside the admissible arc shapes");
  }
  return problems;
}

}  // namespace lwo
