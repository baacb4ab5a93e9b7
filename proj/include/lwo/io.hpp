#ifndef LWO_IO_HPP
#define LWO_IO_HPP

// Text format:
//
//   @prefix foaf: <http://xmlns.com/foaf/0.1/> .
//   concept foaf:Person .
//   role foaf:name .
//   exists foaf:name sub foaf:Person .
//   foaf:Person sub not foaf:Organization .
//
// Concept forms: Bottom, Top, NAME, atleast N ROLE, atmost N ROLE,
// exists ROLE, and "not" before any basic form. ROLE is NAME or inv NAME.
// "A equiv B ." stands for both inclusions. '#' starts a line comment.

#include <map>
#include <string>
#include <string_view>

#include "lwo/graph.hpp"
#include "lwo/model.hpp"

namespace lwo {

/// Prefix label -> namespace IRI.
using PrefixTable = std::map<std::string, std::string>;

struct ParseOptions {
  /// Accept Top on the left-hand side.
  bool allowExtended = false;
  /// Prefixes in scope before the first line.
  PrefixTable prefixes;
};

struct ParsedDocument {
  Ontology ontology;
  PrefixTable prefixes;
};

/// Throws ParseError (with position) on syntax and kind errors.
ParsedDocument parseDocument(std::string_view text, const ParseOptions& options = {});
Ontology parseOntology(std::string_view text, const ParseOptions& options = {});

/// One constraint statement; the final '.' may be omitted. Returns the
/// normalized inclusions, which is empty for a vacuous constraint.
ConstraintSet parseConstraint(std::string_view text, const ParseOptions& options = {});

/// "prefix:local" or "local".
Name parseName(std::string_view text, const PrefixTable& prefixes);

std::string serializeOntology(const Ontology& o);

/// Graphviz rendering; tautological arcs are dashed.
std::string exportDot(const ConstraintGraph& g);

/// lhs TAB rhs per constraint, plus "e TAB Bottom" for every description the
/// constraints force empty.
std::string exportTable(const Ontology& o);

}  // namespace lwo

#endif  // LWO_IO_HPP
