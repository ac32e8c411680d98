#pragma once

// Command-line front end. run_cli() takes argv-style arguments without the
// program name and returns the process exit code:
//
//   0  success, no violation of an asserted claim
//   1  bad input (parse, validation, budget)
//   2  closed form and brute force disagree
//   3  violations found (ratio above 1, failed bound, no bijection)

#include "relorder/classify.hpp"
#include "relorder/groups.hpp"
#include "relorder/numtheory.hpp"
#include "relorder/order_sums.hpp"
#include "relorder/report.hpp"
#include "relorder/table_io.hpp"
#include "relorder/verify.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace relorder::cli {

enum ExitCode : int { kOk = 0, kBadInput = 1, kMismatch = 2, kViolations = 3 };

inline constexpr std::uint64_t kMaxBruteForceCyclic = 1'000'000;

/// Six significant digits, for display next to exact values.
inline std::string approx(const ExactRational& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", r.to_double());
  return buf;
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

inline std::uint64_t parse_uint(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
    throw std::invalid_argument("expected a non-negative integer, got '" + s + "'");
  return std::stoull(s);
}

inline AnyGroup parse_factor(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  std::vector<std::uint64_t> args;
  if (colon != std::string::npos)
    for (const auto& a : split(spec.substr(colon + 1), ',')) args.push_back(parse_uint(a));
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw std::invalid_argument("group spec '" + spec + "' needs " + std::to_string(k) + " parameter(s)");
  };
  if (kind == "cyclic") return need(1), AnyGroup(cyclic(args[0]));
  if (kind == "dihedral") return need(1), AnyGroup(dihedral(args[0]));
  if (kind == "symmetric") return need(1), AnyGroup(symmetric(static_cast<unsigned>(args[0])));
  if (kind == "alternating") return need(1), AnyGroup(alternating(static_cast<unsigned>(args[0])));
  if (kind == "quaternion") return need(0), AnyGroup(quaternion8());
  if (kind == "abelian") return abelian_of_type(args);
  if (kind == "frobenius") {
    need(2);
    if (args[0] > (1u << 20) || args[1] > 20) throw std::invalid_argument("frobenius: p^r must be <= 2^20");
    return AnyGroup(frobenius_field(static_cast<std::uint32_t>(args[0]), static_cast<unsigned>(args[1])));
  }
  throw std::invalid_argument("unknown group kind '" + kind + "'");
}

}  // namespace detail

/// Named group, e.g. "frobenius:2,3", "symmetric:4", "abelian:2,2,4",
/// or a direct product "frobenius:2,3*cyclic:3".
inline AnyGroup parse_group_spec(const std::string& spec) {
  auto parts = detail::split(spec, '*');
  if (parts.empty()) throw std::invalid_argument("empty group spec");
  if (parts.size() == 1) return detail::parse_factor(parts[0]);
  std::vector<AnyGroup> factors;
  for (const auto& p : parts) factors.push_back(detail::parse_factor(p));
  return direct_product(std::move(factors));
}

/// A Cayley-table path, or "@spec" for a named group.
inline AnyGroup load_group(const std::string& arg, std::uint64_t seed) {
  if (!arg.empty() && arg[0] == '@') return parse_group_spec(arg.substr(1));
  return load_cayley_table(arg, seed);
}

inline std::vector<Element> parse_generators(const std::string& text) {
  std::vector<Element> gens;
  if (text.empty()) return gens;
  for (const auto& tok : detail::split(text, ',')) gens.push_back(detail::parse_uint(tok));
  return gens;
}

struct Options {
  unsigned threads = default_threads();
  std::uint64_t seed = 0;
  std::string json_path;
};

class Runner {
public:
  Runner(std::vector<std::string> args, std::ostream& out, std::ostream& err)
      : args_(std::move(args)), out_(out), err_(err), start_(std::chrono::steady_clock::now()) {}

  int psi_cyclic_cmd(std::uint64_t n, bool brute) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    const BigInt closed = psi_cyclic(n);
    out_ << "psi(C_" << n << ") = " << closed << "\n";
    Json res{{"n", n}, {"psi", to_json(closed)}};
    int code = kOk;
    if (brute) {
      if (n > kMaxBruteForceCyclic) throw BudgetExceeded("--brute-force supports n <= 10^6");
      const BigInt bf = psi(CyclicGroup(n), opt_.threads);
      const bool ok = bf == closed;
      out_ << "brute force = " << bf << "\n" << (ok ? "OK" : "MISMATCH") << "\n";
      res["brute_force"] = to_json(bf);
      res["agree"] = ok;
      code = ok ? kOk : kMismatch;
    }
    emit(res);
    return code;
  }

  int frobenius_cmd(unsigned r, std::uint64_t q, bool brute) {
    const CounterexampleSpec spec{r, q};
    validate(spec);
    const BigInt units = (BigInt(1) << r) - 1;
    const BigInt cofactor = q ? q : 1;
    const BigInt n = (units + 1) * units * cofactor;
    const BigInt m = units * cofactor;
    // H contains the whole C_q factor, whose relative orders are all 1.
    const BigInt psi_closed = psi_relative_frobenius_formula(2, r) * cofactor;
    const BigInt reference = m * psi_cyclic(static_cast<std::uint64_t>(units + 1));
    if (brute && (n > BigInt(kMaxBruteForceOrder) || r > kMaxBuildExponent))
      throw BudgetExceeded("--brute-force supports groups of order <= 2^24");
    const ExactRational ratio(psi_closed, reference);

    out_ << "group: Frob(2," << r << ")" << (q ? " x C" + std::to_string(q) : "") << "\n";
    out_ << "n = " << n << "\nm = " << m << "\n";
    out_ << "psi_H (closed form) = " << psi_closed << "\n";
    Json res{{"r", r},
             {"q", q},
             {"n", to_json(n)},
             {"m", to_json(m)},
             {"psi_h", to_json(psi_closed)},
             {"reference", to_json(reference)},
             {"ratio", to_json(ratio)},
             {"ratio_closed_form", to_json(frobenius_ratio_closed_form(r))}};
    int code = kOk;
    if (brute) {
      const auto ce = build_counterexample(spec);
      const BigInt bf = psi_relative(ce.group, ce.subgroup, opt_.threads);
      const bool ok = bf == psi_closed;
      out_ << "psi_H (brute force over " << ce.group.order() << " elements) = " << bf << " "
           << (ok ? "OK" : "MISMATCH") << "\n";
      res["psi_h_brute_force"] = to_json(bf);
      res["agree"] = ok;
      if (!ok) code = kMismatch;
    }
    out_ << "reference m*psi(C_{n/m}) = " << reference << "\n";
    out_ << "ratio = " << ratio << " (~" << approx(ratio) << ")\n";
    const bool violates = ratio > ExactRational(1);
    out_ << "verdict: " << (violates ? "VIOLATES psi_H(G) <= psi_{H_m}(C_n)" : "satisfies psi_H(G) <= psi_{H_m}(C_n)")
         << "\n";
    res["violates"] = violates;
    emit(res);
    return code;
  }

  int scan_cmd(std::uint64_t max_order, bool nilpotent_only) {
    if (max_order > kMaxLatticeOrder) throw BudgetExceeded("--max-order must be <= 200");
    auto entries = default_catalog(max_order);
    if (nilpotent_only) {
      std::erase_if(entries, [](const CatalogEntry& e) { return !is_nilpotent(e.make()); });
    }
    const auto rep = scan_catalog(entries, {opt_.threads});
    out_ << std::left << std::setw(22) << "group" << std::setw(7) << "order" << std::setw(5) << "nil" << std::setw(5)
         << "sol" << std::setw(6) << "subs" << std::setw(14) << "max ratio" << "violations\n";
    for (const auto& g : rep.groups) {
      out_ << std::setw(22) << g.name << std::setw(7) << g.order;
      if (g.error) {
        out_ << "error: " << *g.error << "\n";
        continue;
      }
      ExactRational best = 0;
      for (const auto& v : g.subgroups) best = std::max(best, v.ratio);
      out_ << std::setw(5) << (g.nilpotent ? "y" : "n") << std::setw(5) << (g.solvable ? "y" : "n") << std::setw(6)
           << g.subgroups.size() << std::setw(14) << best.str() << g.violations() << "\n";
    }
    const auto& s = rep.summary;
    out_ << "\ngroups: " << s.groups << ", subgroup pairs: " << s.subgroup_pairs << "\n";
    out_ << "psi(G) <= psi(C_n), equality iff cyclic: " << s.cyclic_maximum_failures << " violations\n";
    out_ << "nilpotent groups, psi_H(G) <= psi_{H_m}(C_n): " << s.nilpotent_violations << " violations\n";
    out_ << "all groups, psi_H(G) <= psi_{H_m}(C_n): " << s.violating_pairs << " violations in "
         << s.violating_groups << " group(s)\n";
    if (s.errors) out_ << "errors: " << s.errors << "\n";

    Json groups = Json::array();
    for (const auto& g : rep.groups) groups.push_back(to_json(g));
    emit(Json{{"summary", to_json(s)}, {"groups", groups}});
    if (s.errors) return kBadInput;
    return s.violating_pairs || s.cyclic_maximum_failures ? kViolations : kOk;
  }

  int check_bounds_cmd(const std::string& group_arg) {
    const auto g = load_group(group_arg, opt_.seed);
    const auto rep = check_bounds(g);
    out_ << "group " << rep.group << ", order " << rep.group_order << ", " << rep.subgroups << " subgroups\n";
    for (const auto& c : rep.checks) {
      const char* tag = !c.asserted ? "INFO" : c.holds() ? "PASS" : "FAIL";
      out_ << tag << "  " << c.name << "  (" << c.checked - c.failed << "/" << c.checked << " hold)\n";
      for (const auto& f : c.failures) out_ << "      " << f << "\n";
    }
    out_ << (rep.asserted_hold() ? "all bounds hold" : "bound violations found") << "\n";
    emit(to_json(rep));
    return rep.asserted_hold() ? kOk : kViolations;
  }

  int bijection_cmd(const std::string& group_arg, const std::string& subgroup) {
    const auto g = load_group(group_arg, opt_.seed);
    const auto h = generate(g, parse_generators(subgroup));
    const auto r = bijection_exists(g, h);
    out_ << "group " << g.name() << ", order " << g.order() << "; subgroup " << h.describe() << "\n";
    out_ << "ratio = " << psi_ratio(g, h, opt_.threads) << "\n";
    if (r.exists) {
      out_ << "BIJECTION EXISTS\n";
    } else {
      out_ << "NO BIJECTION\n";
      out_ << "deficiency certificate: " << r.violator_size << " elements with relative orders {";
      for (std::size_t i = 0; i < r.hall_violator.size(); ++i)
        out_ << (i ? ", " : "") << r.hall_violator[i].relative_order << ":" << r.hall_violator[i].count;
      out_ << "} can reach only " << r.neighborhood_size << " elements of C_" << g.order() << "\n";
    }
    emit(to_json(r));
    return r.exists ? kOk : kViolations;
  }

  int ratios_cmd(const std::string& group_arg) {
    const auto g = load_group(group_arg, opt_.seed);
    const auto recs = subgroup_ratio_scan(g, opt_.threads);
    out_ << "group " << g.name() << ", order " << g.order() << "\n";
    out_ << std::left << std::setw(24) << "generators" << std::setw(7) << "order" << std::setw(12) << "psi_H"
         << std::setw(12) << "reference" << "ratio\n";
    std::uint64_t bad = 0;
    Json rows = Json::array();
    for (const auto& v : recs) {
      std::string gens;
      for (Element x : v.subgroup_generators) gens += (gens.empty() ? "" : ",") + std::to_string(x);
      out_ << std::setw(24) << ("<" + gens + ">") << std::setw(7) << v.subgroup_order << std::setw(12)
           << v.psi_h.str() << std::setw(12) << v.reference.str() << v.ratio << " (~" << approx(v.ratio) << ")"
           << (v.violates() ? "  VIOLATES" : "") << "\n";
      bad += v.violates();
      rows.push_back(to_json(v));
    }
    out_ << bad << " violations\n";
    emit(rows);
    return bad ? kViolations : kOk;
  }

  int monotonicity_cmd(unsigned r_max) {
    const auto rows = monotonicity_report(r_max);
    Json out = Json::array();
    bool ok = true;
    out_ << std::left << std::setw(5) << "r" << std::setw(10) << "mersenne" << std::setw(12) << "~ratio" << "ratio\n";
    for (const auto& row : rows) {
      out_ << std::setw(5) << row.r << std::setw(10) << (row.mersenne ? "yes" : "no") << std::setw(12)
           << approx(row.ratio) << row.ratio << "\n";
      ok = ok && row.increasing && row.below_limit && row.above_one;
      out.push_back(to_json(row));
    }
    out_ << (ok ? "strictly increasing, all values in (1, 3/2)" : "monotonicity or bounds FAILED") << "\n";
    emit(out);
    return ok ? kOk : kViolations;
  }

  int table_cmd(const std::string& spec, const std::string& output) {
    const auto g = parse_group_spec(spec);
    if (g.order() > kMaxTableOrder) throw BudgetExceeded("table output limited to order 4096");
    if (output.empty() || output == "-") {
      write_cayley_table(out_, g);
    } else {
      std::ofstream f(output);
      if (!f) throw std::runtime_error("cannot write " + output);
      write_cayley_table(f, g);
      out_ << "wrote " << g.name() << " (order " << g.order() << ") to " << output << "\n";
    }
    return kOk;
  }

  Options& options() { return opt_; }

private:
  void emit(Json results) {
    if (opt_.json_path.empty()) return;
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    const std::string text = serialize(make_document(args_, std::move(results), ms));
    if (opt_.json_path == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(opt_.json_path);
    if (!f) throw std::runtime_error("cannot write " + opt_.json_path);
    f << text;
  }

  std::vector<std::string> args_;
  std::ostream& out_;
  std::ostream& err_;
  Options opt_;
  std::chrono::steady_clock::time_point start_;
};

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(args, out, err);
  auto& opt = runner.options();

  CLI::App app{"Sums of element orders relative to subgroups"};
  app.name("relorder");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", opt.threads, "Worker threads (results do not depend on it)")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", opt.seed, "Seed for randomized associativity spot checks");
  app.add_option("--json", opt.json_path, "Write the JSON report to this path ('-' for stdout)");

  std::uint64_t n = 0, q = 0, max_order = 63;
  unsigned r = 0, r_max = 20;
  bool brute = false, nilpotent_only = false;
  std::string group_arg, subgroup, spec, output;

  auto* psi_c = app.add_subcommand("psi-cyclic", "Sum of element orders of C_n");
  psi_c->add_option("n", n, "Group order")->required();
  psi_c->add_flag("--brute-force", brute, "Also sum element orders directly (n <= 10^6)");

  auto* frob = app.add_subcommand("frobenius", "Affine group of GF(2^r), optionally times C_q");
  frob->add_option("--r", r, "Exponent with 2^r - 1 prime")->required();
  frob->add_option("--q", q, "Odd prime cofactor not dividing 2^r - 1");
  frob->add_flag("--brute-force", brute, "Confirm psi_H by direct summation");

  auto* scan = app.add_subcommand("scan", "Scan the catalog of constructed groups");
  scan->add_option("--max-order", max_order, "Largest group order (<= 200)");
  scan->add_flag("--nilpotent-only", nilpotent_only, "Restrict to nilpotent groups");

  auto* bounds = app.add_subcommand("check-bounds", "Check the closed-form bounds over all subgroups");
  bounds->add_option("group", group_arg, "Cayley-table file, or @spec")->required();

  auto* bij = app.add_subcommand("bijection", "Decide the order-divisibility bijection G -> C_n");
  bij->add_option("group", group_arg, "Cayley-table file, or @spec")->required();
  bij->add_option("--subgroup", subgroup, "Comma-separated generator encodings")->required();

  auto* ratios = app.add_subcommand("ratios", "Ratio table over all subgroups");
  ratios->add_option("group", group_arg, "Cayley-table file, or @spec")->required();

  auto* mono = app.add_subcommand("monotonicity", "Closed-form ratio for r = 3..r_max");
  mono->add_option("--r-max", r_max, "Largest exponent (3..64)");

  auto* table = app.add_subcommand("table", "Print the Cayley table of a named group");
  table->add_option("spec", spec, "Group spec, e.g. frobenius:2,3 or symmetric:3*cyclic:5")->required();
  table->add_option("-o,--output", output, "Output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (*psi_c) return runner.psi_cyclic_cmd(n, brute);
    if (*frob) return runner.frobenius_cmd(r, q, brute);
    if (*scan) return runner.scan_cmd(max_order, nilpotent_only);
    if (*bounds) return runner.check_bounds_cmd(group_arg);
    if (*bij) return runner.bijection_cmd(group_arg, subgroup);
    if (*ratios) return runner.ratios_cmd(group_arg);
    if (*mono) return runner.monotonicity_cmd(r_max);
    if (*table) return runner.table_cmd(spec, output);
  } catch (const TableError& e) {
    err << "error: " << group_arg << ": " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace relorder::cli
