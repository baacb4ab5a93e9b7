// Forward-chaining saturation of the subsumption relation over a finite
// universe of descriptions. Deliberately independent of graph.cpp.

#include "lwo/error.hpp"
#include "lwo/reason.hpp"

namespace lwo {

bool Saturation::put(std::size_t i, std::size_t j) {
  std::uint64_t& w = rows_[i * words_ + j / 64];
  const std::uint64_t bit = std::uint64_t{1} << (j % 64);
  if (w & bit) return false;
  w |= bit;
  return true;
}

Saturation::Saturation(const ConstraintSet& sigma, const std::set<Concept>& universe) {
  std::set<Concept> u = universe;
  for (const auto& s : sigma) {
    u.insert(s.lhs);
    u.insert(s.rhs);
  }
  u.insert(Concept::bottom());
  std::set<Concept> roles;
  for (const auto& c : u)
    if (c.basic().isAtLeast()) {
      roles.insert(Concept::exists(c.basic().role().role, false));
      roles.insert(Concept::exists(c.basic().role().role, true));
    }
  u.merge(roles);
  std::set<Concept> negs;
  for (const auto& c : u) negs.insert(complement(c));
  u.merge(negs);

  concepts_.assign(u.begin(), u.end());
  for (std::size_t i = 0; i < concepts_.size(); ++i) index_[concepts_[i]] = i;
  const std::size_t n = concepts_.size();
  words_ = (n + 63) / 64;
  rows_.assign(n * words_, 0);

  const std::size_t bot = index_.at(Concept::bottom());
  const std::size_t top = index_.at(Concept::top());
  auto neg = [&](std::size_t i) { return index_.at(complement(concepts_[i])); };

  for (std::size_t i = 0; i < n; ++i) {
    put(i, i);
    put(bot, i);
    put(i, top);
  }
  for (const auto& s : sigma) put(index_.at(s.lhs), index_.at(s.rhs));
  // At-least weakening, stated on positive restrictions only; contraposition
  // supplies the negated direction.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = concepts_[i];
      const auto& b = concepts_[j];
      if (a.isPositive() && b.isPositive() && a.basic().isAtLeast() && b.basic().isAtLeast() &&
          a.basic().role() == b.basic().role() && b.basic().count() <= a.basic().count())
        put(i, j);
    }

  std::vector<std::pair<std::size_t, std::size_t>> coupled;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = concepts_[i];
    if (c.isPositive() && c.basic().isAtLeast() && c.basic().count() == 1 && !c.basic().role().inverse)
      coupled.emplace_back(i, index_.at(Concept::exists(c.basic().role().role, true)));
  }

  bool changed = true;
  while (changed) {
    changed = false;
    // Transitivity.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (get(i, k))
          for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t before = rows_[i * words_ + w];
            rows_[i * words_ + w] |= rows_[k * words_ + w];
            changed |= before != rows_[i * words_ + w];
          }
    // Contraposition.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (get(i, j)) changed |= put(neg(j), neg(i));
    // Contradiction: e sub b and e sub not b give e sub Bottom.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (concepts_[j].isPositive() && get(i, j) && get(i, neg(j))) changed |= put(i, bot);
    // An empty role is empty in both directions.
    for (auto [p, q] : coupled) {
      if (get(p, bot)) changed |= put(q, bot);
      if (get(q, bot)) changed |= put(p, bot);
    }
    // Bottom propagation: e sub Bottom gives e sub f for every f.
    for (std::size_t i = 0; i < n; ++i)
      if (get(i, bot))
        for (std::size_t j = 0; j < n; ++j) changed |= put(i, j);
  }
}

bool Saturation::implies(const Inclusion& q) const {
  auto a = index_.find(q.lhs);
  auto b = index_.find(q.rhs);
  if (a == index_.end() || b == index_.end())
    throw Error("inclusion '" + toString(q) + "' lies outside the saturation universe");
  return get(a->second, b->second);
}

bool oracleImplies(const ConstraintSet& sigma, const Inclusion& q) {
  return Saturation(sigma, {q.lhs, q.rhs}).implies(q);
}

}  // namespace lwo
