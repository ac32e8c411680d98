#pragma once

// Relative element orders o_H(x) and their sums psi_H(G), the ratio against
// the cyclic group of the same order, and the closed-form bounds on them.

#include "relorder/errors.hpp"
#include "relorder/group.hpp"
#include "relorder/numtheory.hpp"
#include "relorder/parallel.hpp"
#include "relorder/subgroup.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace relorder {

inline constexpr std::uint64_t kMaxBruteForceOrder = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kParallelThreshold = 100'000;

/// Smallest m >= 1 with x^m in H, by iterating x, x^2, ...
template <FiniteGroup G>
std::uint64_t relative_order(const G& g, const Subgroup& h, Element x) {
  check_element(g, x);
  if (h.parent_order() != g.order()) throw std::invalid_argument("relative_order: subgroup of a different group");
  std::uint64_t m = 1;
  for (Element y = x; !h.contains(y); y = g.multiply(y, x)) ++m;
  return m;
}

/// o(x) / |<x> n H|, computed independently of relative_order.
template <FiniteGroup G>
std::uint64_t relative_order_via_intersection(const G& g, const Subgroup& h, Element x) {
  check_element(g, x);
  std::uint64_t cyclic_order = 0, in_h = 0;
  Element y = g.identity();
  do {
    ++cyclic_order;
    in_h += h.contains(y);
    y = g.multiply(y, x);
  } while (y != g.identity());
  return cyclic_order / in_h;
}

/// Bulk order computations for one group. Both o(x) and o_H(x) divide n, and
/// {m : x^m in H} is the set of multiples of o_H(x), so starting from n and
/// stripping primes while x^(m/p) stays in H finds o_H(x) in O(log^2 n)
/// multiplications.
template <FiniteGroup G>
class OrderCalculator {
public:
  explicit OrderCalculator(const G& g) : g_(g), primes_(factorize(g.order()).factors) {}

  std::uint64_t order(Element x) const {
    return strip(x, [&](Element y) { return y == g_.identity(); });
  }

  std::uint64_t relative_order(Element x, const Subgroup& h) const {
    if (h.contains(x)) return 1;
    return strip(x, [&](Element y) { return h.contains(y); });
  }

private:
  template <typename InTarget>
  std::uint64_t strip(Element x, InTarget in_target) const {
    std::uint64_t m = g_.order();
    for (const auto& [p, e] : primes_) {
      for (unsigned i = 0; i < e; ++i) {
        if (!in_target(power(g_, x, m / p))) break;
        m /= p;
      }
    }
    return m;
  }

  const G& g_;
  std::vector<PrimePower> primes_;
};

/// Sum of o_H(x) over G. Work is split over `threads` when n > 10^5; the
/// result does not depend on the split.
template <FiniteGroup G>
BigInt psi_relative(const G& g, const Subgroup& h, unsigned threads = default_threads()) {
  const std::uint64_t n = g.order();
  if (n > kMaxBruteForceOrder)
    throw BudgetExceeded("psi_relative: order " + std::to_string(n) +
                         " exceeds the brute-force budget 2^24; use the closed form");
  if (h.parent_order() != n) throw std::invalid_argument("psi_relative: subgroup of a different group");
  const OrderCalculator<G> calc(g);
  const std::uint64_t index = h.index();
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t sum = 0;
    for (Element x = begin; x < end; ++x) {
      // Short walks are cheaper than the prime-stripping search.
      sum += index <= 32 ? relative_order(g, h, x) : calc.relative_order(x, h);
    }
    return sum;
  };
  return BigInt(parallel_sum(n, n > kParallelThreshold ? threads : 1u, chunk));
}

/// Sum of element orders.
template <FiniteGroup G>
BigInt psi(const G& g, unsigned threads = default_threads()) {
  const std::uint64_t n = g.order();
  if (n > kMaxBruteForceOrder)
    throw BudgetExceeded("psi: order " + std::to_string(n) + " exceeds the brute-force budget 2^24");
  const OrderCalculator<G> calc(g);
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t sum = 0;
    for (Element x = begin; x < end; ++x) sum += calc.order(x);
    return sum;
  };
  return BigInt(parallel_sum(n, n > kParallelThreshold ? threads : 1u, chunk));
}

/// psi of the order-m subgroup of C_n relative to C_n: m * psi(C_{n/m}).
inline BigInt psi_cyclic_reference(std::uint64_t n, std::uint64_t m) {
  if (m == 0 || n % m != 0) throw std::invalid_argument("psi_cyclic_reference: m must divide n");
  return BigInt(m) * psi_cyclic(n / m);
}

template <FiniteGroup G>
ExactRational psi_ratio(const G& g, const Subgroup& h, unsigned threads = default_threads()) {
  return ExactRational(psi_relative(g, h, threads), psi_cyclic_reference(g.order(), h.order()));
}

/// (p^r - 1)(psi(C_{p^r - 1}) + p): psi of the complement in the affine
/// group of GF(p^r).
inline BigInt psi_relative_frobenius_formula(std::uint64_t p, unsigned r) {
  if (!is_prime(p)) throw std::invalid_argument("psi_relative_frobenius_formula: p must be prime");
  if (r < 2) throw std::invalid_argument("psi_relative_frobenius_formula: r must be >= 2");
  const BigInt q = big_pow(BigInt(p), r);
  if (q - 1 > BigInt(std::uint64_t{1} << 63)) throw std::invalid_argument("psi_relative_frobenius_formula: p^r too large");
  const auto units = static_cast<std::uint64_t>(q - 1);
  return (q - 1) * (psi_cyclic(units) + p);
}

/// m(q^2 - q + 1).
inline BigInt psi_relative_upper_bound(std::uint64_t m, std::uint64_t q) {
  if (m == 0 || q == 0) throw std::invalid_argument("psi_relative_upper_bound: m and q must be positive");
  BigInt bq = q;
  return BigInt(m) * (bq * bq - bq + 1);
}

struct IndexBounds {
  ExactRational product_bound;  // prod (p_i + 1) / p_i
  ExactRational spread_bound;   // (p_k + 1) / p_1
  ExactRational stated_bound;   // (p_k + 1) / p_k, reported only
};

/// Upper bounds on the ratio for a subgroup of index q >= 2.
inline IndexBounds index_ratio_bounds(const Factorization& index) {
  if (index.factors.empty()) throw std::invalid_argument("index_ratio_bounds: index must be >= 2");
  ExactRational product = 1;
  for (const auto& [p, e] : index.factors) product = product * ExactRational(BigInt(p + 1), BigInt(p));
  const std::uint64_t p1 = index.smallest_prime(), pk = index.largest_prime();
  return {product, ExactRational(BigInt(pk + 1), BigInt(p1)), ExactRational(BigInt(pk + 1), BigInt(pk))};
}

inline IndexBounds index_ratio_bounds(std::uint64_t index) { return index_ratio_bounds(factorize(index)); }

struct PsiReport {
  std::string group;
  std::string subgroup;
  std::uint64_t group_order = 0;
  std::uint64_t subgroup_order = 0;
  BigInt psi_h;
  BigInt psi_cyclic_reference;
  ExactRational ratio;
  BigInt index_bound;
};

template <FiniteGroup G>
PsiReport make_psi_report(const G& g, const Subgroup& h, unsigned threads = default_threads()) {
  PsiReport r;
  r.group = g.name();
  r.subgroup = h.describe();
  r.group_order = g.order();
  r.subgroup_order = h.order();
  r.psi_h = psi_relative(g, h, threads);
  r.psi_cyclic_reference = psi_cyclic_reference(g.order(), h.order());
  r.ratio = ExactRational(r.psi_h, r.psi_cyclic_reference);
  r.index_bound = psi_relative_upper_bound(h.order(), h.index());
  return r;
}

}  // namespace relorder
