#ifndef LWO_REASON_HPP
#define LWO_REASON_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "lwo/graph.hpp"
#include "lwo/model.hpp"

namespace lwo {

/// Decides sigma |= q with the constraint graph G(sigma, {lhs, rhs}).
bool implies(const ConstraintSet& sigma, const Inclusion& q);

/// A tagged graph plus its closure, built once and queried many times.
/// Queries whose sides are not in the graph fall back to `implies`.
class Reasoner {
 public:
  explicit Reasoner(ConstraintSet sigma, const std::set<Concept>& omega = {});

  bool implies(const Inclusion& q) const;
  bool implies(const Concept& e, const Concept& f) const { return implies(Inclusion{e, f}); }
  /// True when Top is forced empty (only possible with Top-on-the-left input).
  bool inconsistent() const { return inconsistent_; }
  const ConstraintGraph& graph() const { return graph_; }
  const ConstraintSet& constraints() const { return sigma_; }

 private:
  ConstraintSet sigma_;
  ConstraintGraph graph_;
  BitMatrix reach_;
  bool inconsistent_ = false;
};

bool equivalentTheories(const ConstraintSet& a, const ConstraintSet& b);

/// Every non-trivial consequence e sub f with e and f labels of G(sigma).
ConstraintSet allConsequences(const ConstraintSet& sigma);

/// Positive descriptions forced empty: labels of bottom nodes of G(sigma).
std::set<Concept> emptyDescriptions(const ConstraintSet& sigma);

/// Saturation-based decision procedure that shares no code with the graph
/// module. Used to cross-check `implies`.
class Saturation {
 public:
  /// `universe` is extended with complements, Bottom, Top and the
  /// (>= 1 P), (>= 1 P-) restrictions of every role it mentions.
  Saturation(const ConstraintSet& sigma, const std::set<Concept>& universe);

  /// Only defined for inclusions whose sides are in the universe; throws
  /// lwo::Error otherwise.
  bool implies(const Inclusion& q) const;
  bool contains(const Concept& c) const { return index_.count(c) != 0; }
  const std::vector<Concept>& universe() const { return concepts_; }

 private:
  bool get(std::size_t i, std::size_t j) const { return (rows_[i * words_ + j / 64] >> (j % 64)) & 1U; }
  bool put(std::size_t i, std::size_t j);

  std::vector<Concept> concepts_;
  std::map<Concept, std::size_t> index_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// The oracle on the universe drawn from sigma and q alone.
bool oracleImplies(const ConstraintSet& sigma, const Inclusion& q);

}  // namespace lwo

#endif  // LWO_REASON_HPP
