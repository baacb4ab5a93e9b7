#include "lwo/normalize.hpp"

#include <limits>

#include "lwo/error.hpp"

namespace lwo {

Concept expandAbbreviations(const SugarConcept& c) {
  struct Visitor {
    Concept operator()(const Concept& x) const { return x; }
    Concept operator()(const sugar::Top&) const { return Concept::top(); }
    Concept operator()(const sugar::Exists& x) const { return Concept::atLeast(1, x.role); }
    Concept operator()(const sugar::NotExists& x) const {
      return complement(Concept::atLeast(1, x.role));
    }
    Concept operator()(const sugar::AtMost& x) const {
      if (x.count == std::numeric_limits<std::uint64_t>::max())
        throw ValidationError("at-most count is too large");
      return complement(Concept::atLeast(x.count + 1, x.role));
    }
  };
  return std::visit(Visitor{}, c);
}

InclusionClass classifyInclusion(const Inclusion& i) {
  using K = InclusionClass::Kind;
  InclusionClass out;
  if (i.lhs.isBottom() || i.rhs.isTop()) {
    out.kind = K::Vacuous;
    return out;
  }
  if (isLightweight(i)) {
    out.kind = K::Lightweight;
    return out;
  }
  if (i.lhs.isNegatedProper() && i.rhs.isNegatedProper()) {
    out.kind = K::ContrapositiveRewritable;
    out.rewritten = Inclusion{complement(i.rhs), complement(i.lhs)};
    return out;
  }
  if (isExtended(i)) {
    out.kind = K::ExtendedTotal;
    return out;
  }
  out.kind = K::IllFormed;
  if (i.lhs.isNegatedProper())
    out.reason = i.rhs.isBottom()
                     ? "a negated description on the left cannot be bounded by Bottom"
                     : "a negated description on the left needs a negated right-hand side";
  else
    out.reason = "unsupported inclusion shape";
  return out;
}

namespace {

void addClassified(const Inclusion& i, bool allowExtended, ConstraintSet& out) {
  using K = InclusionClass::Kind;
  auto cls = classifyInclusion(i);
  switch (cls.kind) {
    case K::Vacuous:
      return;
    case K::Lightweight:
      out.insert(i);
      return;
    case K::ContrapositiveRewritable:
      out.insert(cls.rewritten);
      return;
    case K::ExtendedTotal:
      if (!allowExtended)
        throw ValidationError("'" + toString(i) +
                              "' has Top on the left, which is not a lightweight inclusion");
      out.insert(i);
      return;
    case K::IllFormed:
      throw ValidationError("'" + toString(i) + "' is not a lightweight inclusion: " + cls.reason);
  }
}

}  // namespace

ConstraintSet normalizeConstraintSet(const std::vector<SugarInclusion>& raw, bool allowExtended) {
  ConstraintSet out;
  for (const auto& s : raw) {
    Inclusion i{expandAbbreviations(s.lhs), expandAbbreviations(s.rhs)};
    addClassified(i, allowExtended, out);
    if (s.equivalence) addClassified(Inclusion{i.rhs, i.lhs}, allowExtended, out);
  }
  return out;
}

ConstraintSet normalizeConstraintSet(const std::vector<Inclusion>& raw, bool allowExtended) {
  ConstraintSet out;
  for (const auto& i : raw) addClassified(i, allowExtended, out);
  return out;
}

}  // namespace lwo
