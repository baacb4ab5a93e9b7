#ifndef LWO_MODEL_HPP
#define LWO_MODEL_HPP

// Value types for lightweight ontologies: names, role and concept
// descriptions, inclusions, vocabularies and ontologies.

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace lwo {

/// A vocabulary term. Two names are equal iff their resolved IRIs are equal;
/// the prefix and local part are kept only for display.
class Name {
 public:
  Name() = default;
  Name(std::string prefix, std::string local, std::string iri);

  /// An unprefixed name whose IRI is its local part.
  static Name plain(std::string local);

  const std::string& prefix() const;
  const std::string& local() const;
  const std::string& iri() const;
  /// "prefix:local", or just "local" for unprefixed names.
  std::string display() const;
  bool empty() const { return data_ == nullptr; }

  friend bool operator==(const Name& a, const Name& b) {
    return a.data_ == b.data_ || a.iri() == b.iri();
  }
  friend std::strong_ordering operator<=>(const Name& a, const Name& b) {
    if (a.data_ == b.data_) return std::strong_ordering::equal;
    return a.iri().compare(b.iri()) <=> 0;
  }

 private:
  struct Data {
    std::string prefix;
    std::string local;
    std::string iri;
  };
  std::shared_ptr<const Data> data_;
};

struct RoleDescription {
  Name role;
  bool inverse = false;

  static RoleDescription direct(Name role) { return {std::move(role), false}; }
  static RoleDescription inverseOf(Name role) { return {std::move(role), true}; }

  friend bool operator==(const RoleDescription&, const RoleDescription&) = default;
  friend std::strong_ordering operator<=>(const RoleDescription& a,
                                          const RoleDescription& b) {
    if (auto c = a.role <=> b.role; c != 0) return c;
    return a.inverse <=> b.inverse;
  }
};

/// Bottom, an atomic concept, or an at-least restriction (>= n p) with n >= 1.
class BasicConcept {
 public:
  enum class Kind : std::uint8_t { Bottom, Atomic, AtLeast };

  BasicConcept() = default;  // Bottom
  static BasicConcept bottom() { return {}; }
  static BasicConcept atomic(Name name);
  /// Throws ValidationError when count is zero.
  static BasicConcept atLeast(std::uint64_t count, RoleDescription role);

  Kind kind() const { return kind_; }
  bool isBottom() const { return kind_ == Kind::Bottom; }
  bool isAtomic() const { return kind_ == Kind::Atomic; }
  bool isAtLeast() const { return kind_ == Kind::AtLeast; }

  /// Atomic concept name; only meaningful for Kind::Atomic.
  const Name& conceptName() const { return name_; }
  /// Role description; only meaningful for Kind::AtLeast.
  RoleDescription role() const { return {name_, inverse_}; }
  std::uint64_t count() const { return count_; }

  friend bool operator==(const BasicConcept& a, const BasicConcept& b) {
    return (a <=> b) == 0;
  }
  /// Bottom < Atomic (by IRI) < AtLeast (by role IRI, direct before
  /// inverse, then count).
  friend std::strong_ordering operator<=>(const BasicConcept& a,
                                          const BasicConcept& b);

 private:
  Kind kind_ = Kind::Bottom;
  Name name_;
  bool inverse_ = false;
  std::uint64_t count_ = 0;
};

/// A basic concept or its negation. Top is represented as Negated(Bottom).
class Concept {
 public:
  Concept() = default;
  static Concept positive(BasicConcept b) { return Concept(std::move(b), false); }
  static Concept negated(BasicConcept b) { return Concept(std::move(b), true); }

  static Concept bottom() { return positive(BasicConcept::bottom()); }
  static Concept top() { return negated(BasicConcept::bottom()); }
  static Concept atomic(Name n) { return positive(BasicConcept::atomic(std::move(n))); }
  static Concept atLeast(std::uint64_t n, RoleDescription p) {
    return positive(BasicConcept::atLeast(n, std::move(p)));
  }
  /// (>= 1 P) and (>= 1 P-) respectively.
  static Concept exists(Name role, bool inverse = false) {
    return atLeast(1, RoleDescription{std::move(role), inverse});
  }

  const BasicConcept& basic() const { return basic_; }
  bool isNegated() const { return negated_; }
  bool isPositive() const { return !negated_; }

  bool isBottom() const { return !negated_ && basic_.isBottom(); }
  bool isTop() const { return negated_ && basic_.isBottom(); }
  /// Atomic concept or at-least restriction, not negated.
  bool isPositiveProper() const { return !negated_ && !basic_.isBottom(); }
  /// Negated atomic concept or negated at-least restriction.
  bool isNegatedProper() const { return negated_ && !basic_.isBottom(); }

  friend bool operator==(const Concept&, const Concept&) = default;
  /// All positive forms precede all negated forms; the basic-concept order
  /// applies within each group.
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
    if (a.negated_ != b.negated_) return a.negated_ <=> b.negated_;
    return a.basic_ <=> b.basic_;
  }

 private:
  Concept(BasicConcept b, bool neg) : basic_(std::move(b)), negated_(neg) {}

  BasicConcept basic_;
  bool negated_ = false;
};

Concept complement(const Concept& c);

/// Three-way comparison used for every deterministic ordering of output.
std::strong_ordering canonicalOrder(const Concept& a, const Concept& b);

struct Inclusion {
  Concept lhs;
  Concept rhs;

  friend bool operator==(const Inclusion&, const Inclusion&) = default;
  friend std::strong_ordering operator<=>(const Inclusion& a, const Inclusion& b) {
    if (auto c = a.lhs <=> b.lhs; c != 0) return c;
    return a.rhs <=> b.rhs;
  }
};

using ConstraintSet = std::set<Inclusion>;

/// lhs is an atomic concept or an at-least restriction and rhs is Bottom, an
/// atomic concept, an at-least restriction, or the negation of one of the
/// latter two.
bool isLightweight(const Inclusion& i);
/// Lightweight, or Top on the left with an admissible right-hand side.
bool isExtended(const Inclusion& i);
/// (>= n p) subsumed by (>= m p) with m <= n, or one of the trivially valid
/// shapes (Bottom on the left, Top on the right, e sub e).
bool isTautology(const Inclusion& i);

/// Every concept and role name occurring in the inclusion.
std::set<Name> symbolsOf(const Inclusion& i);
std::set<Name> symbolsOf(const Concept& c);

/// Concepts written on either side of some inclusion, as written.
std::set<Concept> occurringDescriptions(const ConstraintSet& sigma);

struct Vocabulary {
  std::set<Name> concepts;
  std::set<Name> roles;

  bool contains(const Name& n) const { return concepts.count(n) || roles.count(n); }
  std::size_t size() const { return concepts.size() + roles.size(); }

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;
};

/// Concept names and role names used by the constraints.
Vocabulary vocabularyOf(const ConstraintSet& sigma);

/// Union of two vocabularies; throws ValidationError when a name is a concept
/// in one and a role in the other.
Vocabulary merge(const Vocabulary& a, const Vocabulary& b);
Vocabulary intersect(const Vocabulary& a, const Vocabulary& b);

/// A finite vocabulary plus a finite set of (extended) lightweight inclusions
/// over it. Construction validates both.
class Ontology {
 public:
  Ontology() = default;
  Ontology(Vocabulary vocabulary, ConstraintSet constraints);

  const Vocabulary& vocabulary() const { return vocabulary_; }
  const ConstraintSet& constraints() const { return constraints_; }

  friend bool operator==(const Ontology&, const Ontology&) = default;

 private:
  Vocabulary vocabulary_;
  ConstraintSet constraints_;
};

// Renderings in the text-format syntax, e.g. "not atleast 1 inv foaf:name".
std::string toString(const RoleDescription& p);
std::string toString(const BasicConcept& b);
std::string toString(const Concept& c);
std::string toString(const Inclusion& i);

/// Checks Vocabulary and Ontology invariants, throwing ValidationError.
void validate(const Vocabulary& v);
void validate(const Vocabulary& v, const ConstraintSet& sigma);

}  // namespace lwo

#endif  // LWO_MODEL_HPP
