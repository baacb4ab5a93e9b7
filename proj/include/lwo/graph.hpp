#ifndef LWO_GRAPH_HPP
#define LWO_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lwo/model.hpp"
#include "lwo/reach.hpp"

namespace lwo {

struct GraphNode {
  /// Sorted by canonical order; never empty.
  std::vector<Concept> labels;
  bool bottom = false;  // tagged as a bottom node
  bool top = false;     // tagged as a top node
};

enum class ArcKind : std::uint8_t { None = 0, Plain = 1, Tautological = 2 };

/// Which of the four homogeneous label families a node belongs to.
enum class NodeKind { Bottom, Top, Positive, Negated };

/// Condensed, dual-closed, tagged constraint graph. Nodes are numbered in
/// canonical order of their least label, so positive nodes come first.
class ConstraintGraph {
 public:
  std::size_t size() const { return nodes_.size(); }
  const GraphNode& node(int v) const { return nodes_[static_cast<std::size_t>(v)]; }
  int dual(int v) const { return dual_[static_cast<std::size_t>(v)]; }
  NodeKind kind(int v) const;

  std::optional<int> find(const Concept& c) const;
  /// Throws lwo::Error when no node carries the label.
  int nodeOf(const Concept& c) const;

  ArcKind arc(int from, int to) const {
    return static_cast<ArcKind>(arcs_[static_cast<std::size_t>(from) * size() + static_cast<std::size_t>(to)]);
  }
  bool hasArc(int from, int to) const { return arc(from, to) != ArcKind::None; }
  std::vector<int> successors(int v) const;
  std::vector<int> predecessors(int v) const;
  /// All arcs in lexicographic order.
  std::vector<std::pair<int, int>> arcList() const;
  std::size_t arcCount() const;
  Adjacency adjacency() const;

  /// Removes the arc and its dual.
  void removeArc(int from, int to);
  /// Recomputes every tag from scratch.
  void retag();

  /// Keeps only the labels accepted by `keep`; nodes left without labels are
  /// dropped together with their arcs. Tags and arc kinds carry over.
  ConstraintGraph filterLabels(const std::function<bool(const Concept&)>& keep) const;

  /// Assembles a graph from parts; used by the builders in this module.
  static ConstraintGraph assemble(std::vector<GraphNode> nodes, std::vector<int> dual,
                                  const std::vector<std::pair<int, int>>& arcs);

 private:
  void setArc(int from, int to, ArcKind k) {
    arcs_[static_cast<std::size_t>(from) * size() + static_cast<std::size_t>(to)] =
        static_cast<std::uint8_t>(k);
  }

  std::vector<GraphNode> nodes_;
  std::vector<int> dual_;
  std::vector<std::uint8_t> arcs_;
  std::vector<std::pair<Concept, int>> index_;  // sorted by concept
};

/// True when some label of `from` and some label of `to` are at-least
/// restrictions over the same role description forming a valid inclusion.
bool tautologicalPair(const GraphNode& from, const GraphNode& to);

/// Builds and tags G(sigma, omega).
ConstraintGraph buildGraph(const ConstraintSet& sigma, const std::set<Concept>& omega = {});

/// Returns g with tags recomputed.
ConstraintGraph tagGraph(ConstraintGraph g);

/// Arc (M,N) for every nonempty path M to N; labels and tags unchanged.
ConstraintGraph transitiveClosure(const ConstraintGraph& g);

/// Path of length >= 0 from the node of e to the node of f. A query against
/// Bottom on the right (or Top on the left) also succeeds through tags.
bool reaches(const ConstraintGraph& g, const Concept& e, const Concept& f);

/// Reachability including paths of length 0.
BitMatrix reflexiveReach(const ConstraintGraph& g);

/// Lists violated structural properties (empty when the graph is sound).
/// With `extended`, arcs produced by Top-on-the-left inclusions are allowed.
std::vector<std::string> checkInvariants(const ConstraintGraph& g, bool extended = false);

}  // namespace lwo

#endif  // LWO_GRAPH_HPP
