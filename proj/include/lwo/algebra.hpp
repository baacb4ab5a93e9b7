#ifndef LWO_ALGEBRA_HPP
#define LWO_ALGEBRA_HPP

// Operations over lightweight ontologies. Each returns a minimized ontology.

#include <map>
#include <set>
#include <vector>

#include "lwo/model.hpp"

namespace lwo {

/// Vocabulary V1 u V2, constraints minimized from sigma1 u sigma2.
Ontology unite(const Ontology& a, const Ontology& b);

struct DeprecationResult {
  Ontology ontology;
  /// Members of psi that were not constraints of the input.
  std::vector<Inclusion> absent;
};

/// Syntactic removal of psi, then minimization.
DeprecationResult deprecate(const Ontology& o, const ConstraintSet& psi);

/// Every consequence of o that only uses names of w. Throws ValidationError
/// when w is not part of o's vocabulary.
Ontology project(const Ontology& o, const Vocabulary& w);

/// Descriptions that occur in exactly one of the two sets.
std::set<Concept> closureDelta(const ConstraintSet& a, const ConstraintSet& b);

/// Consequences shared by both inputs, over V1 n V2.
Ontology intersect(const Ontology& a, const Ontology& b);

/// A subset of the consequences of a that b does not have, over V1.
Ontology difference(const Ontology& a, const Ontology& b);

/// Projection onto w plus emptiness of every other concept and role of o.
Ontology closedFragment(const Ontology& o, const Vocabulary& w);

class RenamingMap {
 public:
  /// Throws ValidationError when `from` is already mapped.
  void add(const Name& from, const Name& to);
  const Name& apply(const Name& n) const;
  bool empty() const { return pairs_.empty(); }
  const std::map<Name, Name>& pairs() const { return pairs_; }

 private:
  std::map<Name, Name> pairs_;
};

/// Throws ValidationError when two names would collapse into one, or when a
/// source is not part of the vocabulary.
Ontology rename(const Ontology& o, const RenamingMap& m);

}  // namespace lwo

#endif  // LWO_ALGEBRA_HPP
