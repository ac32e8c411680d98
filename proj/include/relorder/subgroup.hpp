#pragma once

// Subgroups as member sets of a parent group: closure, enumeration of the
// full lattice, normality, quotients and the isolated-subgroup test.

#include "relorder/errors.hpp"
#include "relorder/group.hpp"
#include "relorder/groups.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

namespace relorder {

inline constexpr std::uint64_t kMaxLatticeOrder = 200;
inline constexpr std::uint64_t kMaxQuotientIndex = 512;

/// Dense membership bitmap over [0, n).
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::uint64_t n) : n_(n), words_((n + 63) / 64, 0) {}

  bool contains(Element x) const { return x < n_ && (words_[x / 64] >> (x % 64)) & 1; }
  /// Returns true if x was not already present.
  bool insert(Element x) {
    auto& w = words_[x / 64];
    const std::uint64_t bit = std::uint64_t{1} << (x % 64);
    if (w & bit) return false;
    w |= bit;
    return true;
  }
  std::uint64_t universe() const { return n_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ull ^ (h >> 29);
    return h;
  }

private:
  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A subgroup of a parent group of order n. Members are kept sorted; the
/// generator list is whatever produced the closure.
class Subgroup {
public:
  Subgroup() = default;
  Subgroup(std::uint64_t parent_order, std::vector<Element> members, std::vector<Element> generators)
      : set_(parent_order), members_(std::move(members)), generators_(std::move(generators)) {
    std::sort(members_.begin(), members_.end());
    for (Element x : members_) set_.insert(x);
  }

  bool contains(Element x) const { return set_.contains(x); }
  std::uint64_t order() const { return members_.size(); }
  std::uint64_t parent_order() const { return set_.universe(); }
  std::uint64_t index() const { return parent_order() / order(); }
  const std::vector<Element>& members() const { return members_; }
  const std::vector<Element>& generators() const { return generators_; }
  const ElementSet& member_set() const { return set_; }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_order(); }

  std::string describe() const {
    std::string s = "<";
    for (std::size_t i = 0; i < generators_.size(); ++i) s += (i ? "," : "") + std::to_string(generators_[i]);
    return s + "> order " + std::to_string(order());
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

private:
  ElementSet set_;
  std::vector<Element> members_;
  std::vector<Element> generators_;
};

namespace detail {

// Closure of `start` (already closed or just {1}) under right multiplication
// by `gens`; in a finite group this is the generated subgroup.
template <FiniteGroup G>
Subgroup close(const G& g, std::vector<Element> start, std::vector<Element> gens) {
  ElementSet set(g.order());
  for (Element x : start) set.insert(x);
  for (Element s : gens)
    if (set.insert(s)) start.push_back(s);
  for (std::size_t head = 0; head < start.size(); ++head) {
    const Element x = start[head];
    for (Element s : gens) {
      const Element y = g.multiply(x, s);
      if (set.insert(y)) start.push_back(y);
    }
  }
  return Subgroup(g.order(), std::move(start), std::move(gens));
}

}  // namespace detail

/// Smallest subgroup containing gens (breadth-first closure).
template <FiniteGroup G>
Subgroup generate(const G& g, std::vector<Element> gens) {
  for (Element x : gens) check_element(g, x);
  std::vector<Element> kept;
  for (Element x : gens)
    if (x != g.identity() && std::find(kept.begin(), kept.end(), x) == kept.end()) kept.push_back(x);
  return detail::close(g, {g.identity()}, std::move(kept));
}

template <FiniteGroup G>
Subgroup trivial_subgroup(const G& g) {
  return generate(g, {});
}

/// <H, x>.
template <FiniteGroup G>
Subgroup join(const G& g, const Subgroup& h, Element x) {
  check_element(g, x);
  if (h.contains(x)) return h;
  auto gens = h.generators();
  gens.push_back(x);
  return detail::close(g, h.members(), std::move(gens));
}

/// A small generating set, chosen greedily in ascending encoding order.
template <FiniteGroup G>
Subgroup whole_group(const G& g) {
  Subgroup s = trivial_subgroup(g);
  for (Element x = 0; x < g.order() && !s.is_whole(); ++x)
    if (!s.contains(x)) s = join(g, s, x);
  return s;
}

/// Every subgroup exactly once, sorted by (order, member list). Starts from
/// the cyclic subgroups and joins with cyclic subgroups until no new
/// subgroup appears; every subgroup is a join of cyclic ones.
template <FiniteGroup G>
std::vector<Subgroup> all_subgroups(const G& g, std::uint64_t cap = kMaxLatticeOrder) {
  if (g.order() > cap)
    throw BudgetExceeded("all_subgroups: order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));

  struct Hash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
  };
  std::unordered_set<ElementSet, Hash> seen;
  std::vector<Subgroup> found;
  std::vector<Element> cyclic_gens;

  for (Element x = 0; x < g.order(); ++x) {
    Subgroup c = generate(g, {x});
    if (seen.insert(c.member_set()).second) {
      found.push_back(std::move(c));
      cyclic_gens.push_back(x);
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element c : cyclic_gens) {
      if (found[i].contains(c)) continue;
      Subgroup j = join(g, found[i], c);
      if (seen.insert(j.member_set()).second) found.push_back(std::move(j));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return found;
}

/// gHg^-1 = H for all g; checked on the generators of H.
template <FiniteGroup G>
bool is_normal(const G& g, const Subgroup& h) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element s : h.generators())
      if (!h.contains(conjugate(g, x, s))) return false;
  return true;
}

class NotNormal : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// G/K on cosets; each coset is represented by its minimal encoding and
/// cosets are numbered in ascending representative order (identity first).
template <FiniteGroup G>
CayleyTableGroup quotient(const G& g, const Subgroup& k) {
  if (!is_normal(g, k)) throw NotNormal("quotient: subgroup is not normal");
  const std::uint64_t index = k.index();
  if (index > kMaxQuotientIndex) throw BudgetExceeded("quotient: index exceeds 512");
  constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  std::vector<std::uint64_t> coset_of(g.order(), kUnset);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    for (Element m : k.members()) coset_of[g.multiply(x, m)] = reps.size();
    reps.push_back(x);
  }
  std::vector<std::vector<Element>> table(index, std::vector<Element>(index));
  for (std::uint64_t a = 0; a < index; ++a)
    for (std::uint64_t b = 0; b < index; ++b) table[a][b] = coset_of[g.multiply(reps[a], reps[b])];
  return CayleyTableGroup(std::move(table), g.name() + "/" + std::to_string(k.order()));
}

/// Every x lies in H or has <x> meeting H trivially.
template <FiniteGroup G>
bool is_isolated(const G& g, const Subgroup& h) {
  for (Element x = 0; x < g.order(); ++x) {
    if (h.contains(x)) continue;
    for (Element y = x; y != g.identity(); y = g.multiply(y, x))
      if (h.contains(y)) return false;
  }
  return true;
}

/// H meets gHg^-1 trivially for every g outside H.
template <FiniteGroup G>
bool conjugates_intersect_trivially(const G& g, const Subgroup& h) {
  for (Element x = 0; x < g.order(); ++x) {
    if (h.contains(x)) continue;
    const Element xi = g.inverse(x);
    for (Element m : h.members()) {
      if (m == g.identity()) continue;
      // m is in xHx^-1 iff x^-1 m x is in H
      if (h.contains(g.multiply(g.multiply(xi, m), x))) return false;
    }
  }
  return true;
}

}  // namespace relorder
