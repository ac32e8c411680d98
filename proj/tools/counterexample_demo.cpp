// Walks through the order-56 example: the affine group of GF(8) and the
// complement of its translation subgroup.

#include "relorder/relorder.hpp"

#include <iomanip>
#include <iostream>
#include <map>

using namespace relorder;

int main() {
  const auto ce = build_counterexample({3, 0});
  const auto& g = ce.group;
  const auto& h = ce.subgroup;
  const auto n = g.order(), m = h.order();

  std::cout << g.name() << ": order " << n << ", H = " << h.describe() << "\n";
  std::cout << "nilpotent: " << (is_nilpotent(g) ? "yes" : "no") << ", solvable: " << (is_solvable(g) ? "yes" : "no")
            << "\n\n";

  std::map<std::uint64_t, std::uint64_t> ord, rel;
  for (Element x = 0; x < n; ++x) {
    ++ord[element_order(g, x)];
    ++rel[relative_order(g, h, x)];
  }
  std::cout << "element orders:   ";
  for (auto [k, c] : ord) std::cout << c << " of order " << k << "  ";
  std::cout << "\nrelative to H:    ";
  for (auto [k, c] : rel) std::cout << c << " of order " << k << "  ";
  std::cout << "\n\n";

  const BigInt psi_h = psi_relative(g, h);
  const BigInt reference = BigInt(m) * psi_cyclic(n / m);
  const ExactRational ratio(psi_h, reference);
  std::cout << "psi_H(G)          = " << psi_h << "\n";
  std::cout << "psi_Hm(C_" << n << ")      = " << reference << "\n";
  std::cout << "ratio             = " << ratio << " (~" << std::setprecision(6) << ratio.to_double() << ")\n";
  std::cout << "closed form       = " << frobenius_ratio_closed_form(3) << "\n\n";

  const auto bij = bijection_exists(g, h);
  std::cout << "order-divisibility bijection onto C_" << n << ": " << (bij.exists ? "exists" : "none") << "\n";
  if (!bij.exists)
    std::cout << bij.violator_size << " elements compete for " << bij.neighborhood_size << " targets\n";
  return ratio > ExactRational(1) ? 0 : 1;
}
