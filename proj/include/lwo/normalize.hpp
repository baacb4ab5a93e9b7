#ifndef LWO_NORMALIZE_HPP
#define LWO_NORMALIZE_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "lwo/model.hpp"

namespace lwo {

// Surface forms accepted by the text format before expansion.
namespace sugar {
struct Top {};
struct Exists {
  RoleDescription role;
};
struct AtMost {
  std::uint64_t count;
  RoleDescription role;
};
// "not exists p"; negation of any other basic form is already a Concept.
struct NotExists {
  RoleDescription role;
};
}  // namespace sugar

using SugarConcept =
    std::variant<Concept, sugar::Top, sugar::Exists, sugar::AtMost, sugar::NotExists>;

struct SugarInclusion {
  SugarConcept lhs;
  SugarConcept rhs;
  bool equivalence = false;  // lhs equiv rhs stands for both directions
};

/// exists p -> (>= 1 p); (<= n p) -> not (>= n+1 p); Top -> not Bottom.
Concept expandAbbreviations(const SugarConcept& c);

struct InclusionClass {
  enum class Kind { Lightweight, Vacuous, ContrapositiveRewritable, ExtendedTotal, IllFormed };
  Kind kind = Kind::Lightweight;
  Inclusion rewritten;  // set for ContrapositiveRewritable
  std::string reason;   // set for IllFormed
};

InclusionClass classifyInclusion(const Inclusion& i);

/// Expands, classifies and filters. Throws ValidationError on an ill-formed
/// member, or on a Top-on-the-left member when allowExtended is false.
ConstraintSet normalizeConstraintSet(const std::vector<SugarInclusion>& raw,
                                     bool allowExtended = false);

/// Same pipeline for already-unabbreviated inclusions.
ConstraintSet normalizeConstraintSet(const std::vector<Inclusion>& raw,
                                     bool allowExtended = false);

}  // namespace lwo

#endif  // LWO_NORMALIZE_HPP
