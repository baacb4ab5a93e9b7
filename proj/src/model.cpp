#include "lwo/model.hpp"

#include "lwo/error.hpp"

namespace lwo {

Name::Name(std::string prefix, std::string local, std::string iri)
    : data_(std::make_shared<const Data>(
          Data{std::move(prefix), std::move(local), std::move(iri)})) {
  if (data_->iri.empty()) throw ValidationError("name with an empty IRI");
}

Name Name::plain(std::string local) {
  std::string iri = local;
  return Name({}, std::move(local), std::move(iri));
}

namespace {
const std::string kEmpty;
}

const std::string& Name::prefix() const { return data_ ? data_->prefix : kEmpty; }
const std::string& Name::local() const { return data_ ? data_->local : kEmpty; }
const std::string& Name::iri() const { return data_ ? data_->iri : kEmpty; }

std::string Name::display() const {
  if (!data_) return {};
  if (data_->prefix.empty()) return data_->local;
  return data_->prefix + ":" + data_->local;
}

BasicConcept BasicConcept::atomic(Name name) {
  BasicConcept b;
  b.kind_ = Kind::Atomic;
  b.name_ = std::move(name);
  return b;
}

BasicConcept BasicConcept::atLeast(std::uint64_t count, RoleDescription role) {
  if (count == 0) throw ValidationError("at-least restriction with count 0");
  BasicConcept b;
  b.kind_ = Kind::AtLeast;
  b.name_ = std::move(role.role);
  b.inverse_ = role.inverse;
  b.count_ = count;
  return b;
}

std::strong_ordering operator<=>(const BasicConcept& a, const BasicConcept& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  switch (a.kind_) {
    case BasicConcept::Kind::Bottom:
      return std::strong_ordering::equal;
    case BasicConcept::Kind::Atomic:
      return a.name_ <=> b.name_;
    case BasicConcept::Kind::AtLeast:
      if (auto c = a.name_ <=> b.name_; c != 0) return c;
      if (auto c = a.inverse_ <=> b.inverse_; c != 0) return c;
      return a.count_ <=> b.count_;
  }
  return std::strong_ordering::equal;
}

Concept complement(const Concept& c) {
  return c.isNegated() ? Concept::positive(c.basic()) : Concept::negated(c.basic());
}

std::strong_ordering canonicalOrder(const Concept& a, const Concept& b) { return a <=> b; }

namespace {

bool admissibleRhs(const Concept& c) {
  // Bottom, atomic, at-least, or the negation of atomic / at-least.
  return c.isPositive() || !c.basic().isBottom();
}

}  // namespace

bool isLightweight(const Inclusion& i) {
  return i.lhs.isPositiveProper() && admissibleRhs(i.rhs);
}

bool isExtended(const Inclusion& i) {
  return isLightweight(i) || (i.lhs.isTop() && admissibleRhs(i.rhs));
}

bool isTautology(const Inclusion& i) {
  if (i.lhs == i.rhs) return true;
  if (i.lhs.isBottom() || i.rhs.isTop()) return true;
  // Bottom on the left of a negation is covered above; so is e sub Top.
  const auto& l = i.lhs.basic();
  const auto& r = i.rhs.basic();
  if (!l.isAtLeast() || !r.isAtLeast() || l.role() != r.role()) return false;
  if (i.lhs.isPositive() && i.rhs.isPositive()) return r.count() <= l.count();
  if (i.lhs.isNegated() && i.rhs.isNegated()) return l.count() <= r.count();
  return false;
}

std::set<Name> symbolsOf(const Concept& c) {
  const auto& b = c.basic();
  if (b.isAtomic()) return {b.conceptName()};
  if (b.isAtLeast()) return {b.role().role};
  return {};
}

std::set<Name> symbolsOf(const Inclusion& i) {
  auto out = symbolsOf(i.lhs);
  out.merge(symbolsOf(i.rhs));
  return out;
}

std::set<Concept> occurringDescriptions(const ConstraintSet& sigma) {
  std::set<Concept> out;
  for (const auto& i : sigma) {
    out.insert(i.lhs);
    out.insert(i.rhs);
  }
  return out;
}

Vocabulary vocabularyOf(const ConstraintSet& sigma) {
  Vocabulary v;
  for (const auto& i : sigma) {
    for (const Concept* c : {&i.lhs, &i.rhs}) {
      const auto& b = c->basic();
      if (b.isAtomic()) v.concepts.insert(b.conceptName());
      if (b.isAtLeast()) v.roles.insert(b.role().role);
    }
  }
  validate(v);
  return v;
}

Vocabulary merge(const Vocabulary& a, const Vocabulary& b) {
  Vocabulary v = a;
  v.concepts.insert(b.concepts.begin(), b.concepts.end());
  v.roles.insert(b.roles.begin(), b.roles.end());
  validate(v);
  return v;
}

Vocabulary intersect(const Vocabulary& a, const Vocabulary& b) {
  validate(merge(a, b));
  Vocabulary v;
  for (const auto& n : a.concepts)
    if (b.concepts.count(n)) v.concepts.insert(n);
  for (const auto& n : a.roles)
    if (b.roles.count(n)) v.roles.insert(n);
  return v;
}

void validate(const Vocabulary& v) {
  for (const auto& n : v.concepts) {
    if (v.roles.count(n))
      throw ValidationError("'" + n.display() + "' is declared both as a concept and as a role");
  }
}

void validate(const Vocabulary& v, const ConstraintSet& sigma) {
  validate(v);
  for (const auto& i : sigma) {
    if (!isExtended(i))
      throw ValidationError("not a lightweight inclusion: " + toString(i));
    for (const Concept* c : {&i.lhs, &i.rhs}) {
      const auto& b = c->basic();
      if (b.isAtomic() && !v.concepts.count(b.conceptName()))
        throw ValidationError("concept '" + b.conceptName().display() + "' used in '" +
                              toString(i) + "' is not in the vocabulary");
      if (b.isAtLeast() && !v.roles.count(b.role().role))
        throw ValidationError("role '" + b.role().role.display() + "' used in '" +
                              toString(i) + "' is not in the vocabulary");
    }
  }
}

Ontology::Ontology(Vocabulary vocabulary, ConstraintSet constraints)
    : vocabulary_(std::move(vocabulary)), constraints_(std::move(constraints)) {
  validate(vocabulary_, constraints_);
}

std::string toString(const RoleDescription& p) {
  return p.inverse ? "inv " + p.role.display() : p.role.display();
}

std::string toString(const BasicConcept& b) {
  switch (b.kind()) {
    case BasicConcept::Kind::Bottom:
      return "Bottom";
    case BasicConcept::Kind::Atomic:
      return b.conceptName().display();
    case BasicConcept::Kind::AtLeast:
      return "atleast " + std::to_string(b.count()) + " " + toString(b.role());
  }
  return {};
}

std::string toString(const Concept& c) {
  if (c.isTop()) return "Top";
  return c.isNegated() ? "not " + toString(c.basic()) : toString(c.basic());
}

std::string toString(const Inclusion& i) {
  return toString(i.lhs) + " sub " + toString(i.rhs);
}

}  // namespace lwo
