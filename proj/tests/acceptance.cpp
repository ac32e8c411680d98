// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "relorder/cli.hpp"
#include "relorder/relorder.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace relorder;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

// Everything the catalog criteria need, computed once per (group, subgroup).
struct PairData {
  Subgroup h;
  BigInt psi_h;
  BigInt psi_sub;  // psi(H)
  std::uint64_t max_relative_order = 0;
  ExactRational ratio;
};

struct GroupData {
  std::string name;
  AnyGroup g;
  bool nilpotent = false;
  bool cyclic = false;
  BigInt psi;
  std::vector<PairData> pairs;
};

std::vector<GroupData> load_catalog(std::uint64_t max_order) {
  const auto entries = default_catalog(max_order);
  std::vector<GroupData> out;
  for (const auto& e : entries) out.push_back(GroupData{e.name, e.make(), false, false, 0, {}});
  parallel_for(out.size(), default_threads(), [&](std::size_t i) {
    GroupData& d = out[i];
    const auto& g = d.g;
    d.nilpotent = is_nilpotent(g);
    d.cyclic = is_cyclic(g);
    d.psi = psi(g, 1);
    for (auto& h : all_subgroups(g)) {
      PairData p{h, 0, 0, 0, 0};
      for (Element x = 0; x < g.order(); ++x) {
        const auto o = relative_order(g, h, x);
        p.psi_h += o;
        p.max_relative_order = std::max(p.max_relative_order, o);
      }
      for (Element x : h.members()) p.psi_sub += element_order(g, x);
      p.ratio = ExactRational(p.psi_h, psi_cyclic_reference(g.order(), h.order()));
      d.pairs.push_back(std::move(p));
    }
  });
  return out;
}

const std::vector<GroupData>& catalog100() {
  static const auto data = load_catalog(100);
  return data;
}

std::string pair_name(const GroupData& d, const PairData& p) { return d.name + " H=" + p.h.describe(); }

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  const int rc = cli::run_cli({"frobenius", "--r", "3", "--brute-force"}, out, err);
  const double secs = seconds_since(t0);
  const std::string text = out.str();
  o.require(rc == 0, "exit code " + std::to_string(rc));
  o.require(text.find("ratio = 45/43") != std::string::npos, "ratio line missing");
  o.require(text.find("brute force over 56 elements) = 315 OK") != std::string::npos, "brute-force 315 missing");
  o.require(text.find("VIOLATES") != std::string::npos, "verdict missing");
  // (p^r - 1)(psi(C_{p^r-1}) + p) with p = 2, r = 3
  o.require(BigInt(7) * (psi_cyclic(7) + 2) == 315, "closed form is not 315");
  o.require(secs < 1.0, "took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = "45/43, psi_H = 315 in " + std::to_string(secs) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::ostringstream note;
  for (unsigned r : {3u, 5u, 7u}) {
    const auto t0 = Clock::now();
    const auto g = frobenius_field(2, r);
    const auto h = generate(g, {g.complement_element(1)});
    const auto ratio = psi_ratio(g, h);
    const double secs = seconds_since(t0);
    const double limit = r == 7 ? 60.0 : 5.0;
    o.require(ratio == frobenius_ratio_closed_form(r), "r=" + std::to_string(r) + " ratio " + ratio.str());
    o.require(secs < limit, "r=" + std::to_string(r) + " took " + std::to_string(secs) + " s");
    note << "r=" << r << " " << ratio << " (" << g.order() << " elements, " << secs << " s) ";
  }
  if (o.ok) o.detail = note.str();
  return o;
}

Outcome criterion3() {
  Outcome o;
  const ExactRational target(BigInt(45), BigInt(43));
  for (std::uint64_t q : {3u, 5u, 11u}) {
    const auto ce = build_counterexample({3, q});
    o.require(ce.predicted_ratio == target, "q=" + std::to_string(q) + " predicted " + ce.predicted_ratio.str());
    const auto ratio = psi_ratio(ce.group, ce.subgroup);
    o.require(ratio == target, "q=" + std::to_string(q) + " brute force " + ratio.str());
    if (q == 3) o.require(ce.group.order() == 168, "q=3 group order " + std::to_string(ce.group.order()));
  }
  if (o.ok) o.detail = "45/43 for q = 3, 5, 11 (brute force over 168, 280, 616 elements)";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const ExactRational one(1), limit(BigInt(3), BigInt(2));
  ExactRational prev = 0;
  for (unsigned r = 3; r <= 20; ++r) {
    const auto v = frobenius_ratio_closed_form(r);
    o.require(v > one && v < limit, "r=" + std::to_string(r) + " outside (1, 3/2)");
    if (r > 3) o.require(v > prev, "not increasing at r=" + std::to_string(r));
    prev = v;
  }
  if (o.ok) o.detail = "r = 3..20, last value " + prev.str();
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (std::uint64_t n = 1; n <= 1000; ++n)
    o.require(psi_cyclic(n) == psi(CyclicGroup(n), 1), "psi_cyclic mismatch at n=" + std::to_string(n));
  for (std::uint64_t n = 2; n <= 10000; ++n)
    o.require(ExactRational(psi_cyclic(n)) >= psi_cyclic_lower_bound(n), "lower bound fails at n=" + std::to_string(n));
  if (o.ok) o.detail = "closed form n <= 1000, lower bound 2 <= n <= 10000";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::uint64_t checked = 0;
  for (const auto& d : catalog100()) {
    if (d.g.order() > 64) continue;
    for (const auto& p : d.pairs) {
      if (!is_normal(d.g, p.h)) continue;
      ++checked;
      o.require(p.psi_h == BigInt(p.h.order()) * psi(quotient(d.g, p.h), 1), pair_name(d, p));
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " normal subgroups";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::uint64_t checked = 0, prime_index = 0;
  for (const auto& d : catalog100()) {
    for (const auto& p : d.pairs) {
      ++checked;
      const auto m = p.h.order(), q = p.h.index();
      o.require(p.max_relative_order <= q, "relative order above index: " + pair_name(d, p));
      o.require(p.psi_h <= psi_relative_upper_bound(m, q), "psi_H above |H|(q^2-q+1): " + pair_name(d, p));
      if (is_prime(q)) {
        ++prime_index;
        o.require(p.psi_h <= BigInt(m) * psi_cyclic(q), "prime index bound: " + pair_name(d, p));
      }
    }
  }
  if (o.ok)
    o.detail = std::to_string(checked) + " pairs, " + std::to_string(prime_index) + " of prime index";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::uint64_t nil_pairs = 0, groups = 0;
  for (const auto& d : catalog100()) {
    ++groups;
    const BigInt cyc = psi_cyclic(d.g.order());
    o.require(d.psi <= cyc && ((d.psi == cyc) == d.cyclic), "psi(G) vs psi(C_n): " + d.name);
    if (!d.nilpotent || d.g.order() > 64) continue;
    for (const auto& p : d.pairs) {
      ++nil_pairs;
      o.require(p.ratio <= ExactRational(1), "nilpotent violation: " + pair_name(d, p) + " ratio " + p.ratio.str());
    }
  }
  if (o.ok)
    o.detail = std::to_string(nil_pairs) + " nilpotent pairs (n <= 64), " + std::to_string(groups) +
               " groups (n <= 100)";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::uint64_t checked = 0, isolated = 0;
  for (const auto& d : catalog100()) {
    if (d.g.order() > 64) continue;
    for (const auto& p : d.pairs) {
      ++checked;
      const bool iso = is_isolated(d.g, p.h);
      isolated += iso;
      const bool formula = p.psi_h == BigInt(p.h.order()) + d.psi - p.psi_sub;
      o.require(iso == formula, "characterization fails: " + pair_name(d, p));
    }
  }
  for (unsigned r : {3u, 5u}) {
    const auto g = frobenius_field(2, r);
    const auto h = generate(g, {g.complement_element(1)});
    o.require(is_isolated(g, h), g.name() + " complement not isolated");
    o.require(conjugates_intersect_trivially(g, h), g.name() + " complement conjugates meet");
  }
  if (o.ok)
    o.detail = std::to_string(checked) + " pairs (" + std::to_string(isolated) +
               " isolated); Frob(2,3), Frob(2,5) complements";
  return o;
}

Outcome criterion10() {
  Outcome o;
  {
    const auto g = frobenius_field(2, 3);
    const auto h = generate(g, {g.complement_element(1)});
    o.require(!bijection_exists(g, h).exists, "Frob(2,3) complement admits a bijection");
  }
  std::uint64_t scanned = 0, nil_pairs = 0, none = 0;
  for (const auto& d : catalog100()) {
    if (d.g.order() > 64) continue;
    for (const auto& p : d.pairs) {
      ++scanned;
      const bool exists = bijection_exists(d.g, p.h).exists;
      none += !exists;
      if (d.nilpotent) {
        ++nil_pairs;
        o.require(exists, "no bijection for nilpotent " + pair_name(d, p));
      }
      if (p.ratio > ExactRational(1)) o.require(!exists, "ratio > 1 but bijection exists: " + pair_name(d, p));
    }
  }
  if (o.ok)
    o.detail = std::to_string(scanned) + " pairs scanned, " + std::to_string(nil_pairs) + " nilpotent, " +
               std::to_string(none) + " without bijection";
  return o;
}

Outcome criterion11() {
  Outcome o;
  const ExactRational half3(BigInt(3), BigInt(2)), limit(BigInt(27), BigInt(14)), tol(BigInt(1), BigInt(10000));
  ExactRational prev = 0;
  unsigned first_crossing = 0;
  for (unsigned a = 1; a <= 15; ++a) {
    const auto v = f_ratio(3 * (std::uint64_t{1} << a));
    if (a > 1) o.require(v > prev, "not increasing at a=" + std::to_string(a));
    o.require(v < limit, "above 27/14 at a=" + std::to_string(a));
    if (v > half3 && first_crossing == 0) first_crossing = a;
    if (first_crossing) o.require(v > half3, "drops back below 3/2 at a=" + std::to_string(a));
    prev = v;
  }
  o.require(limit - prev <= tol, "a=15 value " + prev.str() + " not within 1e-4 of 27/14");
  o.require(first_crossing == 2, "first crossing of 3/2 at a=" + std::to_string(first_crossing));
  if (o.ok) o.detail = "first exceeds 3/2 at a=2; 27/14 - f(3*2^15) ~ " + cli::approx(limit - prev);
  return o;
}

Outcome criterion12() {
  Outcome o;
  std::uint64_t checked = 0, stated_fail = 0;
  for (const auto& d : catalog100()) {
    for (const auto& p : d.pairs) {
      if (p.h.index() < 2) continue;
      ++checked;
      const auto b = index_ratio_bounds(p.h.index());
      o.require(p.ratio < b.product_bound, "product bound: " + pair_name(d, p));
      o.require(p.ratio < b.spread_bound, "spread bound: " + pair_name(d, p));
      stated_fail += !(p.ratio < b.stated_bound);
    }
  }
  if (o.ok)
    o.detail = std::to_string(checked) + " pairs; stated (p_k+1)/p_k bound (not asserted): " +
               std::to_string(checked - stated_fail) + " hold, " + std::to_string(stated_fail) + " fail";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"headline ratio 45/43 for the order-56 group", criterion1},
      {"closed form equals brute force for r = 3, 5, 7", criterion2},
      {"counterexamples times C_q for q = 3, 5, 11", criterion3},
      {"closed form increasing in (1, 3/2) for r = 3..20", criterion4},
      {"psi(C_n) closed form and lower bound", criterion5},
      {"normal subgroups: psi_K(G) = |K| psi(G/K)", criterion6},
      {"relative order, |H|(q^2-q+1) and prime-index bounds", criterion7},
      {"nilpotent groups satisfy the inequality; psi(G) <= psi(C_n)", criterion8},
      {"isolated subgroup characterization", criterion9},
      {"order-divisibility bijection", criterion10},
      {"f(3*2^a) increasing towards 27/14", criterion11},
      {"index bounds on the ratio", criterion12},
  };
  {
    const auto t0 = Clock::now();
    std::uint64_t pairs = 0;
    for (const auto& d : catalog100()) pairs += d.pairs.size();
    std::cout << "catalog: " << catalog100().size() << " groups of order <= 100, " << pairs << " subgroups ("
              << static_cast<long>(seconds_since(t0) * 1000) << " ms)" << std::endl;
  }
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << i + 1 << "] " << criteria[i].first << ": " << o.detail << " ("
              << static_cast<long>(seconds_since(t0) * 1000) << " ms)" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
