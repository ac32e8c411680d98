#pragma once

// Checks of the relative-order inequality against the cyclic
// group over whole subgroup lattices, the affine-group counterexample family,
// the order-divisibility bijection question and catalog scans.

#include "relorder/classify.hpp"
#include "relorder/errors.hpp"
#include "relorder/group.hpp"
#include "relorder/groups.hpp"
#include "relorder/numtheory.hpp"
#include "relorder/order_sums.hpp"
#include "relorder/parallel.hpp"
#include "relorder/subgroup.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace relorder {

struct ViolationRecord {
  std::string group;
  std::uint64_t group_order = 0;
  std::vector<Element> subgroup_generators;
  std::uint64_t subgroup_order = 0;
  BigInt psi_h;
  BigInt reference;  // m * psi(C_{n/m})
  ExactRational ratio;
  bool nilpotent = false;
  bool solvable = false;

  bool violates() const { return ratio > ExactRational(1); }
};

/// One record per subgroup, in all_subgroups order.
template <FiniteGroup G>
std::vector<ViolationRecord> subgroup_ratio_scan(const G& g, unsigned threads = 1) {
  const auto subgroups = all_subgroups(g);
  const bool nilpotent = is_nilpotent(g);
  const bool solvable = is_solvable(g);
  std::vector<ViolationRecord> out;
  out.reserve(subgroups.size());
  for (const auto& h : subgroups) {
    ViolationRecord v;
    v.group = g.name();
    v.group_order = g.order();
    v.subgroup_generators = h.generators();
    v.subgroup_order = h.order();
    v.psi_h = psi_relative(g, h, threads);
    v.reference = psi_cyclic_reference(g.order(), h.order());
    v.ratio = ExactRational(v.psi_h, v.reference);
    v.nilpotent = nilpotent;
    v.solvable = solvable;
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Counterexample family: AGL(1, 2^r) [x C_q].

struct CounterexampleSpec {
  unsigned r = 3;
  std::uint64_t q = 0;  // 0: no cyclic factor

  std::uint64_t units() const { return (std::uint64_t{1} << r) - 1; }
  std::uint64_t group_order() const { return (units() + 1) * units() * (q ? q : 1); }
  std::uint64_t subgroup_order() const { return units() * (q ? q : 1); }
};

enum class CounterexampleError { ExponentOutOfRange, NotMersenne, CofactorEven, CofactorNotPrime, CofactorDividesUnits };

class InvalidCounterexample : public std::invalid_argument {
public:
  InvalidCounterexample(CounterexampleError kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  CounterexampleError kind() const { return kind_; }

private:
  CounterexampleError kind_;
};

/// Maximum exponent for which the group itself can be built (field cap 2^20).
inline constexpr unsigned kMaxBuildExponent = 20;

inline void validate(const CounterexampleSpec& spec, unsigned max_r = 64) {
  const std::string two_r = "2^" + std::to_string(spec.r) + "-1";
  if (spec.r < 3 || spec.r > max_r)
    throw InvalidCounterexample(CounterexampleError::ExponentOutOfRange,
                                "r must be in [3, " + std::to_string(max_r) + "]");
  if (!is_mersenne_exponent(spec.r))
    throw InvalidCounterexample(CounterexampleError::NotMersenne, two_r + " not prime");
  if (spec.q == 0) return;
  if (spec.q % 2 == 0)
    throw InvalidCounterexample(CounterexampleError::CofactorEven, "q must be odd");
  if (!is_prime(spec.q))
    throw InvalidCounterexample(CounterexampleError::CofactorNotPrime, "q must be prime");
  if (spec.units() % spec.q == 0)
    throw InvalidCounterexample(CounterexampleError::CofactorDividesUnits, "q must not divide " + two_r);
}

struct Counterexample {
  CounterexampleSpec spec;
  AnyGroup group;
  Subgroup subgroup;
  ExactRational predicted_ratio;  // closed form
};

/// G = AGL(1, 2^r) [x C_q] with H = multiplicative complement [x C_q].
inline Counterexample build_counterexample(const CounterexampleSpec& spec) {
  validate(spec, kMaxBuildExponent);
  FrobeniusFieldGroup frob(2, spec.r);
  const Element complement_gen = frob.complement_element(1);
  if (spec.q == 0) {
    Subgroup h = generate(frob, {complement_gen});
    return {spec, AnyGroup(std::move(frob)), std::move(h), frobenius_ratio_closed_form(spec.r)};
  }
  DirectProductGroup g({AnyGroup(frob), AnyGroup(CyclicGroup(spec.q))});
  const Element a = g.encode(std::vector<Element>{complement_gen, 0});
  const Element b = g.encode(std::vector<Element>{0, 1});
  Subgroup h = generate(g, {a, b});
  return {spec, AnyGroup(std::move(g)), std::move(h), frobenius_ratio_closed_form(spec.r)};
}

// ---------------------------------------------------------------------------
// Order-divisibility bijection G -> C_n with o_H(x) | o_{H_m}(f(x)).

inline constexpr std::uint64_t kMaxBijectionOrder = 10'000;

struct OrderClass {
  std::uint64_t relative_order;
  std::uint64_t count;
  friend bool operator==(const OrderClass&, const OrderClass&) = default;
};

struct BijectionResult {
  bool exists = false;
  /// witness[x] = f(x) as an element of C_n, when exists.
  std::vector<Element> witness;
  /// When not exists: relative-order classes of G whose combined size exceeds
  /// the number of C_n elements they can map to.
  std::vector<OrderClass> hall_violator;
  std::uint64_t violator_size = 0;
  std::uint64_t neighborhood_size = 0;
};

namespace detail {

// Dinic max-flow on a small dense graph.
class MaxFlow {
public:
  explicit MaxFlow(std::size_t nodes) : cap_(nodes, std::vector<std::uint64_t>(nodes, 0)) {}
  void add(std::size_t u, std::size_t v, std::uint64_t c) { cap_[u][v] += c; }
  std::uint64_t flow(std::size_t u, std::size_t v) const { return original_.empty() ? 0 : original_[u][v] - cap_[u][v]; }

  std::uint64_t run(std::size_t s, std::size_t t) {
    original_ = cap_;
    std::uint64_t total = 0;
    while (bfs(s, t)) {
      iter_.assign(cap_.size(), 0);
      while (std::uint64_t f = dfs(s, t, std::numeric_limits<std::uint64_t>::max())) total += f;
    }
    return total;
  }

  /// Nodes reachable from s in the residual graph (valid after run()).
  std::vector<bool> reachable(std::size_t s) const {
    std::vector<bool> seen(cap_.size(), false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < cap_.size(); ++v)
        if (cap_[u][v] > 0 && !seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    return seen;
  }

private:
  bool bfs(std::size_t s, std::size_t t) {
    level_.assign(cap_.size(), -1);
    std::vector<std::size_t> queue{s};
    level_[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto u = queue[head];
      for (std::size_t v = 0; v < cap_.size(); ++v)
        if (cap_[u][v] > 0 && level_[v] < 0) {
          level_[v] = level_[u] + 1;
          queue.push_back(v);
        }
    }
    return level_[t] >= 0;
  }

  std::uint64_t dfs(std::size_t u, std::size_t t, std::uint64_t pushed) {
    if (u == t) return pushed;
    for (auto& v = iter_[u]; v < cap_.size(); ++v) {
      if (cap_[u][v] == 0 || level_[v] != level_[u] + 1) continue;
      if (std::uint64_t f = dfs(v, t, std::min(pushed, cap_[u][v]))) {
        cap_[u][v] -= f;
        cap_[v][u] += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<std::vector<std::uint64_t>> cap_, original_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace detail

/// Decides the bijection question by maximum flow on relative-order classes:
/// an edge x - y exists iff o_H(x) | o_{H_m}(y), so it depends only on the two
/// order values and a perfect matching exists iff the class-level transport
/// saturates. On failure the source side of a minimum cut is a Hall violator.
template <FiniteGroup G>
BijectionResult bijection_exists(const G& g, const Subgroup& h) {
  const std::uint64_t n = g.order();
  if (n > kMaxBijectionOrder) throw BudgetExceeded("bijection_exists: order exceeds 10^4");
  const CyclicGroup cn(n);
  const Subgroup hm = generate(cn, {n / h.order() % n});

  const OrderCalculator<G> calc_g(g);
  const OrderCalculator<CyclicGroup> calc_c(cn);
  std::map<std::uint64_t, std::vector<Element>> left, right;
  for (Element x = 0; x < n; ++x) left[calc_g.relative_order(x, h)].push_back(x);
  for (Element y = 0; y < n; ++y) right[calc_c.relative_order(y, hm)].push_back(y);

  std::vector<std::uint64_t> lv, rv;
  for (const auto& [v, _] : left) lv.push_back(v);
  for (const auto& [v, _] : right) rv.push_back(v);
  const std::size_t source = 0, sink = 1, lbase = 2, rbase = 2 + lv.size();
  detail::MaxFlow mf(rbase + rv.size());
  const std::uint64_t inf = n + 1;
  for (std::size_t i = 0; i < lv.size(); ++i) {
    mf.add(source, lbase + i, left[lv[i]].size());
    for (std::size_t j = 0; j < rv.size(); ++j)
      if (rv[j] % lv[i] == 0) mf.add(lbase + i, rbase + j, inf);
  }
  for (std::size_t j = 0; j < rv.size(); ++j) mf.add(rbase + j, sink, right[rv[j]].size());

  BijectionResult result;
  result.exists = mf.run(source, sink) == n;
  if (result.exists) {
    result.witness.assign(n, 0);
    std::vector<std::size_t> used(rv.size(), 0);
    for (std::size_t i = 0; i < lv.size(); ++i) {
      const auto& xs = left[lv[i]];
      std::size_t next_x = 0;
      for (std::size_t j = 0; j < rv.size(); ++j) {
        const auto f = mf.flow(lbase + i, rbase + j);
        const auto& ys = right[rv[j]];
        for (std::uint64_t k = 0; k < f; ++k) result.witness[xs[next_x++]] = ys[used[j]++];
      }
    }
  } else {
    const auto seen = mf.reachable(source);
    for (std::size_t i = 0; i < lv.size(); ++i)
      if (seen[lbase + i]) {
        result.hall_violator.push_back({lv[i], left[lv[i]].size()});
        result.violator_size += left[lv[i]].size();
      }
    for (std::size_t j = 0; j < rv.size(); ++j)
      if (seen[rbase + j]) result.neighborhood_size += right[rv[j]].size();
  }
  return result;
}

// ---------------------------------------------------------------------------
// Bounds over a whole subgroup lattice.

struct BoundCheck {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  bool asserted = true;  // false: reported only
  std::vector<std::string> failures;

  void record(bool ok, const std::string& context) {
    ++checked;
    if (!ok) {
      ++failed;
      if (failures.size() < 10) failures.push_back(context);
    }
  }
  bool holds() const { return failed == 0; }
};

struct BoundsReport {
  std::string group;
  std::uint64_t group_order = 0;
  std::uint64_t subgroups = 0;
  std::vector<BoundCheck> checks;

  bool asserted_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return !c.asserted || c.holds(); });
  }
  const BoundCheck& get(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw std::out_of_range("no check named " + name);
  }
};

namespace check_names {
inline constexpr const char* kRelativeOrderIndex = "relative order <= index";
inline constexpr const char* kPsiIndexBound = "psi_H <= |H|(q^2-q+1)";
inline constexpr const char* kPrimeIndex = "prime index: psi_H <= m psi(C_q)";
inline constexpr const char* kNormalQuotient = "normal K: psi_K = |K| psi(G/K)";
inline constexpr const char* kIsolated = "isolated <=> psi_H = |H| + psi(G) - psi(H)";
inline constexpr const char* kProductBound = "ratio < prod (p_i+1)/p_i";
inline constexpr const char* kSpreadBound = "ratio < (p_k+1)/p_1";
inline constexpr const char* kStatedBound = "ratio < (p_k+1)/p_k";
}  // namespace check_names

/// Runs every closed-form bound against brute force for all subgroups.
template <FiniteGroup G>
BoundsReport check_bounds(const G& g) {
  namespace cn = check_names;
  BoundsReport rep;
  rep.group = g.name();
  rep.group_order = g.order();
  auto named = [](const char* name, bool asserted = true) {
    BoundCheck c;
    c.name = name;
    c.asserted = asserted;
    return c;
  };
  BoundCheck rel = named(cn::kRelativeOrderIndex), index_bound = named(cn::kPsiIndexBound), prime = named(cn::kPrimeIndex),
             normal = named(cn::kNormalQuotient), isolated = named(cn::kIsolated),
             product = named(cn::kProductBound), spread = named(cn::kSpreadBound),
             stated = named(cn::kStatedBound, false);

  const auto n = g.order();
  const OrderCalculator<G> calc(g);
  std::vector<std::uint64_t> orders(n);
  BigInt psi_g = 0;
  for (Element x = 0; x < n; ++x) {
    orders[x] = calc.order(x);
    psi_g += orders[x];
  }

  const auto subgroups = all_subgroups(g);
  rep.subgroups = subgroups.size();
  for (const auto& h : subgroups) {
    const std::uint64_t m = h.order(), q = h.index();
    const std::string ctx = g.name() + " H=" + h.describe();
    std::uint64_t max_rel = 0, sum = 0;
    for (Element x = 0; x < n; ++x) {
      const auto o = relative_order(g, h, x);
      max_rel = std::max(max_rel, o);
      sum += o;
    }
    const BigInt psi_h = sum;
    rel.record(max_rel <= q, ctx);
    index_bound.record(psi_h <= psi_relative_upper_bound(m, q), ctx);
    if (is_prime(q)) prime.record(psi_h <= BigInt(m) * psi_cyclic(q), ctx);
    if (is_normal(g, h)) normal.record(psi_h == BigInt(m) * psi(quotient(g, h), 1), ctx);
    BigInt psi_sub = 0;
    for (Element x : h.members()) psi_sub += orders[x];
    isolated.record(is_isolated(g, h) == (psi_h == BigInt(m) + psi_g - psi_sub), ctx);
    if (q >= 2) {
      const ExactRational ratio(psi_h, psi_cyclic_reference(n, m));
      const auto b = index_ratio_bounds(q);
      product.record(ratio < b.product_bound, ctx);
      spread.record(ratio < b.spread_bound, ctx);
      stated.record(ratio < b.stated_bound, ctx);
    }
  }
  rep.checks = {rel, index_bound, prime, normal, isolated, product, spread, stated};
  return rep;
}

// ---------------------------------------------------------------------------
// Catalog and scans.

struct CatalogEntry {
  std::string name;
  std::uint64_t order;
  std::function<AnyGroup()> make;
};

namespace detail {

inline void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur,
                       std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

/// Primary decompositions of all abelian groups of order n, as lists of
/// prime-power cyclic factor orders (ascending per prime).
inline std::vector<std::vector<std::uint64_t>> abelian_types(std::uint64_t n) {
  std::vector<std::vector<std::uint64_t>> types{{}};
  for (const auto& [p, e] : factorize(n).factors) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& t : types)
      for (const auto& part : parts) {
        auto u = t;
        for (auto it = part.rbegin(); it != part.rend(); ++it) {
          std::uint64_t pp = 1;
          for (unsigned i = 0; i < *it; ++i) pp *= p;
          u.push_back(pp);
        }
        next.push_back(std::move(u));
      }
    types = std::move(next);
  }
  return types;
}

}  // namespace detail

/// Groups reachable with the named constructors up to max_order: cyclic and
/// all abelian groups, dihedral, S_3, S_4, A_4, A_5, Q_8, affine groups of
/// GF(p^r), and direct products of the nonabelian ones with abelian groups.
/// Not an isomorphism-complete census.
inline std::vector<CatalogEntry> default_catalog(std::uint64_t max_order) {
  std::vector<CatalogEntry> cat;
  std::vector<CatalogEntry> abelian;
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    for (const auto& type : detail::abelian_types(n)) {
      // The cyclic group is the type whose factors have distinct primes.
      std::vector<std::uint64_t> primes;
      for (auto pp : type) primes.push_back(factorize(pp).smallest_prime());
      const bool cyclic_type = std::adjacent_find(primes.begin(), primes.end()) == primes.end();
      CatalogEntry e;
      e.order = n;
      if (cyclic_type) {
        e.make = [n] { return AnyGroup(CyclicGroup(n)); };
      } else {
        e.make = [type] { return abelian_of_type(type); };
      }
      e.name = e.make().name();
      abelian.push_back(e);
    }
  }
  cat = abelian;

  std::vector<CatalogEntry> nonabelian;
  auto add = [&](std::uint64_t order, std::function<AnyGroup()> make) {
    if (order <= max_order) nonabelian.push_back({make().name(), order, std::move(make)});
  };
  add(6, [] { return AnyGroup(symmetric(3)); });
  for (std::uint64_t k = 4; 2 * k <= max_order; ++k) add(2 * k, [k] { return AnyGroup(dihedral(k)); });
  add(8, [] { return AnyGroup(quaternion8()); });
  add(12, [] { return AnyGroup(alternating(4)); });
  add(24, [] { return AnyGroup(symmetric(4)); });
  add(60, [] { return AnyGroup(alternating(5)); });
  for (std::uint32_t p = 2; std::uint64_t{p} * (p - 1) <= max_order; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t q = p;
    for (unsigned r = 1; q * (q - 1) <= max_order; ++r, q *= p) {
      // AGL(1,2) = C2, AGL(1,3) = S3, AGL(1,4) = A4 are already present.
      if (q <= 4) continue;
      add(q * (q - 1), [p, r] { return AnyGroup(frobenius_field(p, r)); });
    }
  }
  std::sort(nonabelian.begin(), nonabelian.end(), [](const auto& a, const auto& b) {
    return a.order != b.order ? a.order < b.order : a.name < b.name;
  });
  const std::size_t base_count = nonabelian.size();
  for (std::size_t i = 0; i < base_count; ++i) {
    const auto base = nonabelian[i];
    for (const auto& a : abelian) {
      if (a.order < 2 || base.order * a.order > max_order) continue;
      nonabelian.push_back({base.name + "x" + a.name, base.order * a.order, [base, a] {
                              std::vector<AnyGroup> f{base.make()};
                              AnyGroup ag = a.make();
                              if (auto* dp = ag.as<DirectProductGroup>())
                                for (const auto& c : dp->factors()) f.push_back(c);
                              else
                                f.push_back(ag);
                              return AnyGroup(direct_product(std::move(f)));
                            }});
    }
  }
  cat.insert(cat.end(), nonabelian.begin(), nonabelian.end());
  std::stable_sort(cat.begin(), cat.end(), [](const auto& a, const auto& b) { return a.order < b.order; });
  return cat;
}

struct ScanOptions {
  unsigned threads = default_threads();
};

struct GroupScan {
  std::string name;
  std::uint64_t order = 0;
  bool nilpotent = false;
  bool solvable = false;
  bool cyclic = false;
  BigInt psi;
  BigInt psi_cyclic_same_order;
  std::vector<ViolationRecord> subgroups;
  std::optional<std::string> error;

  std::uint64_t violations() const {
    return static_cast<std::uint64_t>(
        std::count_if(subgroups.begin(), subgroups.end(), [](const ViolationRecord& v) { return v.violates(); }));
  }
  /// psi(G) <= psi(C_n) with equality exactly for cyclic G.
  bool cyclic_maximum_holds() const {
    return psi <= psi_cyclic_same_order && ((psi == psi_cyclic_same_order) == cyclic);
  }
};

struct ScanSummary {
  std::uint64_t groups = 0;
  std::uint64_t subgroup_pairs = 0;
  std::uint64_t violating_pairs = 0;
  std::uint64_t violating_groups = 0;
  std::uint64_t nilpotent_violations = 0;  // asserted: must be 0
  std::uint64_t cyclic_maximum_failures = 0;  // asserted: must be 0
  std::uint64_t errors = 0;
};

struct CatalogReport {
  std::vector<GroupScan> groups;
  ScanSummary summary;
};

template <FiniteGroup G>
GroupScan scan_group(const G& g) {
  GroupScan s;
  s.name = g.name();
  s.order = g.order();
  try {
    s.nilpotent = is_nilpotent(g);
    s.solvable = is_solvable(g);
    s.cyclic = is_cyclic(g);
    s.psi = psi(g, 1);
    s.psi_cyclic_same_order = psi_cyclic(g.order());
    s.subgroups = subgroup_ratio_scan(g, 1);
  } catch (const std::exception& e) {
    s.error = e.what();
  }
  return s;
}

/// Per-group work runs in parallel; output order follows the input order.
inline CatalogReport scan_catalog(const std::vector<CatalogEntry>& entries, const ScanOptions& opt = {}) {
  CatalogReport rep;
  rep.groups.resize(entries.size());
  parallel_for(entries.size(), opt.threads, [&](std::size_t i) {
    try {
      rep.groups[i] = scan_group(entries[i].make());
    } catch (const std::exception& e) {
      rep.groups[i].name = entries[i].name;
      rep.groups[i].order = entries[i].order;
      rep.groups[i].error = e.what();
    }
  });
  auto& s = rep.summary;
  for (const auto& g : rep.groups) {
    ++s.groups;
    if (g.error) {
      ++s.errors;
      continue;
    }
    s.subgroup_pairs += g.subgroups.size();
    const auto v = g.violations();
    s.violating_pairs += v;
    s.violating_groups += v > 0;
    if (g.nilpotent) s.nilpotent_violations += v;
    s.cyclic_maximum_failures += !g.cyclic_maximum_holds();
  }
  return rep;
}

struct MonotonicityRow {
  unsigned r;
  ExactRational ratio;
  bool mersenne;
  bool below_limit;  // ratio < 3/2
  bool above_one;
  bool increasing;   // ratio > previous row (true for the first row)
};

inline std::vector<MonotonicityRow> monotonicity_report(unsigned r_max) {
  if (r_max < 3 || r_max > 64) throw std::invalid_argument("monotonicity_report: r_max must be in [3, 64]");
  std::vector<MonotonicityRow> rows;
  const ExactRational limit(BigInt(3), BigInt(2));
  for (unsigned r = 3; r <= r_max; ++r) {
    auto ratio = frobenius_ratio_closed_form(r);
    const bool inc = rows.empty() || ratio > rows.back().ratio;
    rows.push_back({r, ratio, is_mersenne_exponent(r), ratio < limit, ratio > ExactRational(1), inc});
  }
  return rows;
}

}  // namespace relorder
