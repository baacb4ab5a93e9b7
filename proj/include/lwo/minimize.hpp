#ifndef LWO_MINIMIZE_HPP
#define LWO_MINIMIZE_HPP

#include "lwo/graph.hpp"
#include "lwo/model.hpp"

namespace lwo {

/// Transitive reduction of an acyclic tagged graph. Tautological arcs are
/// always kept; every other arc is dropped, with its dual, when another
/// successor of its source already reaches its target.
ConstraintGraph minimizeGraph(const ConstraintGraph& g);

/// Reads a constraint set back from a tagged graph.
ConstraintSet generateConstraints(const ConstraintGraph& h);

/// generateConstraints(minimizeGraph(buildGraph(sigma))).
ConstraintSet minimizeConstraints(const ConstraintSet& sigma);

}  // namespace lwo

#endif  // LWO_MINIMIZE_HPP
