#pragma once

#include "relorder/errors.hpp"
#include "relorder/group.hpp"
#include "relorder/numtheory.hpp"
#include "relorder/order_sums.hpp"
#include "relorder/subgroup.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace relorder {

inline constexpr std::uint64_t kMaxClassifyOrder = std::uint64_t{1} << 16;

namespace detail {

inline void check_classify_budget(std::uint64_t n) {
  if (n > kMaxClassifyOrder) throw BudgetExceeded("classification limited to groups of order <= 2^16");
}

/// Normal closure of `seeds` inside the subgroup `within`.
template <FiniteGroup G>
Subgroup normal_closure(const G& g, const Subgroup& within, const std::vector<Element>& seeds) {
  Subgroup n = generate(g, seeds);
  bool grew = true;
  while (grew) {
    grew = false;
    const auto gens = n.generators();
    for (Element s : within.generators()) {
      for (Element y : gens) {
        const Element c = conjugate(g, s, y);
        if (!n.contains(c)) {
          n = join(g, n, c);
          grew = true;
        }
      }
    }
  }
  return n;
}

}  // namespace detail

/// Commutator subgroup of a subgroup S: the normal closure in S of the
/// commutators of its generators.
template <FiniteGroup G>
Subgroup derived_subgroup(const G& g, const Subgroup& s) {
  detail::check_classify_budget(g.order());
  std::vector<Element> comms;
  const auto& gens = s.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(g, gens[i], gens[j]));
  return detail::normal_closure(g, s, comms);
}

template <FiniteGroup G>
Subgroup derived_subgroup(const G& g) {
  detail::check_classify_budget(g.order());
  return derived_subgroup(g, whole_group(g));
}

/// The derived series reaches the trivial group.
template <FiniteGroup G>
bool is_solvable(const G& g) {
  detail::check_classify_budget(g.order());
  Subgroup s = whole_group(g);
  // A strictly decreasing chain has at most log2(n) + 1 proper steps.
  const unsigned cap = static_cast<unsigned>(std::bit_width(g.order())) + 1;
  for (unsigned step = 0; step <= cap; ++step) {
    if (s.is_trivial()) return true;
    Subgroup d = derived_subgroup(g, s);
    if (d.order() == s.order()) return false;
    s = std::move(d);
  }
  throw std::logic_error("is_solvable: derived series failed to terminate");
}

/// Every Sylow subgroup is normal: for each p | n the p-elements form a
/// subgroup of order the p-part of n.
template <FiniteGroup G>
bool is_nilpotent(const G& g) {
  detail::check_classify_budget(g.order());
  const auto n = g.order();
  const OrderCalculator<G> calc(g);
  std::vector<std::uint64_t> orders(n);
  for (Element x = 0; x < n; ++x) orders[x] = calc.order(x);
  for (const auto& [p, e] : factorize(n).factors) {
    std::uint64_t p_part = 1;
    for (unsigned i = 0; i < e; ++i) p_part *= p;
    std::vector<Element> p_elements;
    for (Element x = 0; x < n; ++x)
      if (p_part % orders[x] == 0) p_elements.push_back(x);
    if (p_elements.size() != p_part) return false;
    Subgroup closure = trivial_subgroup(g);
    for (Element x : p_elements) {
      if (closure.contains(x)) continue;
      closure = join(g, closure, x);
      if (closure.order() > p_part) return false;
    }
  }
  return true;
}

/// Some element has order n.
template <FiniteGroup G>
bool is_cyclic(const G& g) {
  const OrderCalculator<G> calc(g);
  for (Element x = 0; x < g.order(); ++x)
    if (calc.order(x) == g.order()) return true;
  return false;
}

}  // namespace relorder
