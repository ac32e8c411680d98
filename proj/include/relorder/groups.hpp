#pragma once

// Concrete group realizations and the named constructors used by the catalog.

#include "relorder/errors.hpp"
#include "relorder/finite_field.hpp"
#include "relorder/group.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace relorder {

inline constexpr std::uint64_t kMaxNamedOrder = std::uint64_t{1} << 16;
inline constexpr unsigned kMaxPermutationDegree = 8;
inline constexpr std::uint64_t kMaxAssociativityCheck = 512;

/// Z/n under addition.
class CyclicGroup {
public:
  explicit CyclicGroup(std::uint64_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("CyclicGroup: order must be positive");
  }
  std::uint64_t order() const { return n_; }
  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const {
    Element s = a + b;
    return s >= n_ ? s - n_ : s;
  }
  Element inverse(Element a) const { return a == 0 ? 0 : n_ - a; }
  std::string name() const { return "C" + std::to_string(n_); }

private:
  std::uint64_t n_;
};

/// Rotations 0..n-1 followed by reflections n..2n-1.
class DihedralGroup {
public:
  explicit DihedralGroup(std::uint64_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("DihedralGroup: n must be positive");
  }
  std::uint64_t order() const { return 2 * n_; }
  Element identity() const { return 0; }
  Element multiply(Element x, Element y) const {
    const bool rx = x < n_, ry = y < n_;
    const Element a = rx ? x : x - n_, b = ry ? y : y - n_;
    if (rx && ry) return (a + b) % n_;
    if (rx) return (a + b) % n_ + n_;
    if (ry) return (a + n_ - b) % n_ + n_;
    return (a + n_ - b) % n_;
  }
  Element inverse(Element x) const { return x < n_ ? (n_ - x) % n_ : x; }
  std::string name() const { return "D" + std::to_string(2 * n_); }

private:
  std::uint64_t n_;
};

/// Group given by a validated multiplication table; element 0 is the identity.
class CayleyTableGroup {
public:
  /// Trusts the table; use from_cayley_table for untrusted input.
  CayleyTableGroup(std::vector<std::vector<Element>> table, std::string name)
      : n_(table.size()), name_(std::move(name)) {
    flat_.reserve(n_ * n_);
    for (const auto& row : table) flat_.insert(flat_.end(), row.begin(), row.end());
    inverse_.assign(n_, 0);
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b)
        if (flat_[a * n_ + b] == 0) inverse_[a] = b;
  }

  std::uint64_t order() const { return n_; }
  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const { return flat_[a * n_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  std::string name() const { return name_; }

private:
  std::uint64_t n_;
  std::vector<Element> flat_;
  std::vector<Element> inverse_;
  std::string name_;
};

/// Validates and wraps a Cayley table. Associativity is checked exhaustively
/// for n <= 512 and on 10^5 random triples (seeded) above that.
inline CayleyTableGroup from_cayley_table(const std::vector<std::vector<Element>>& table,
                                          std::string name = "table", std::uint64_t seed = 0) {
  const std::size_t n = table.size();
  if (n == 0) throw TableError(TableErrorKind::NotSquare, "empty table");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw TableError(TableErrorKind::NotSquare,
                       "row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
                           " entries, expected " + std::to_string(n));
    for (Element e : table[i])
      if (e >= n) throw TableError(TableErrorKind::EntryOutOfRange, "entry " + std::to_string(e));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[0][i] != i || table[i][0] != i)
      throw TableError(TableErrorKind::MissingIdentity, "row/column 0 differs at " + std::to_string(i));
  }
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element e : table[i]) {
      if (seen[e]) throw TableError(TableErrorKind::NotLatin, "row " + std::to_string(i) + " repeats " + std::to_string(e));
      seen[e] = 1;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      Element e = table[i][j];
      if (seen[e]) throw TableError(TableErrorKind::NotLatin, "column " + std::to_string(j) + " repeats " + std::to_string(e));
      seen[e] = 1;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = table[a][b] == 0 && table[b][a] == 0;
    if (!found) throw TableError(TableErrorKind::MissingInverse, "element " + std::to_string(a));
  }
  if (n <= kMaxAssociativityCheck) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Element ab = table[a][b];
        for (std::size_t c = 0; c < n; ++c) {
          if (table[ab][c] != table[a][table[b][c]])
            throw TableError(TableErrorKind::NotAssociative,
                             "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" + std::to_string(c));
        }
      }
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 100'000; ++i) {
      const std::size_t a = rng() % n, b = rng() % n, c = rng() % n;
      if (table[table[a][b]][c] != table[a][table[b][c]])
        throw TableError(TableErrorKind::NotAssociative,
                         "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" + std::to_string(c));
    }
  }
  return CayleyTableGroup(table, std::move(name));
}

/// Materializes the multiplication table of any group.
template <FiniteGroup G>
std::vector<std::vector<Element>> cayley_table(const G& g) {
  const auto n = g.order();
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a][b] = g.multiply(a, b);
  return t;
}

using Permutation = std::vector<std::uint8_t>;

/// Closure of a set of permutations of {0..d-1}, d <= 8. Elements are encoded
/// by their rank in lexicographic order, so the identity is 0. The product
/// a*b is the map i -> a[b[i]].
class PermutationGroup {
public:
  PermutationGroup(unsigned degree, const std::vector<Permutation>& generators, std::string name)
      : degree_(degree), name_(std::move(name)) {
    if (degree == 0 || degree > kMaxPermutationDegree)
      throw std::invalid_argument("PermutationGroup: degree must be in [1, 8]");
    for (const auto& g : generators) {
      if (g.size() != degree) throw std::invalid_argument("PermutationGroup: generator has wrong degree");
      Permutation sorted = g;
      std::sort(sorted.begin(), sorted.end());
      for (unsigned i = 0; i < degree; ++i)
        if (sorted[i] != i) throw std::invalid_argument("PermutationGroup: generator is not a permutation");
    }
    unsigned long fact = 1;
    for (unsigned i = 2; i <= degree; ++i) fact *= i;
    std::vector<char> seen(fact, 0);
    Permutation id(degree);
    for (unsigned i = 0; i < degree; ++i) id[i] = static_cast<std::uint8_t>(i);
    std::vector<Permutation> found{id};
    seen[lehmer_rank(id)] = 1;
    for (std::size_t head = 0; head < found.size(); ++head) {
      for (const auto& g : generators) {
        Permutation next = compose(found[head], g);
        auto rank = lehmer_rank(next);
        if (!seen[rank]) {
          seen[rank] = 1;
          found.push_back(std::move(next));
        }
      }
    }
    std::sort(found.begin(), found.end());
    perms_ = std::move(found);
    index_.assign(fact, kNone);
    for (std::size_t i = 0; i < perms_.size(); ++i) index_[lehmer_rank(perms_[i])] = i;
    inverse_.resize(perms_.size());
    for (std::size_t i = 0; i < perms_.size(); ++i) {
      Permutation inv(degree);
      for (unsigned k = 0; k < degree; ++k) inv[perms_[i][k]] = static_cast<std::uint8_t>(k);
      inverse_[i] = index_[lehmer_rank(inv)];
    }
  }

  std::uint64_t order() const { return perms_.size(); }
  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const { return index_[lehmer_rank(compose(perms_[a], perms_[b]))]; }
  Element inverse(Element a) const { return inverse_[a]; }
  std::string name() const { return name_; }

  unsigned degree() const { return degree_; }
  const Permutation& permutation(Element x) const { return perms_.at(x); }
  Element encode(const Permutation& p) const {
    if (p.size() != degree_) throw std::invalid_argument("PermutationGroup: wrong degree");
    Element e = index_[lehmer_rank(p)];
    if (e == kNone) throw InvalidElement("permutation is not in " + name_);
    return e;
  }

private:
  static constexpr Element kNone = ~Element{0};

  static Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
    return out;
  }

  static std::size_t lehmer_rank(const Permutation& p) {
    std::size_t rank = 0;
    const std::size_t d = p.size();
    for (std::size_t i = 0; i < d; ++i) {
      std::size_t smaller = 0;
      for (std::size_t j = i + 1; j < d; ++j) smaller += p[j] < p[i];
      rank = rank * (d - i) + smaller;
    }
    return rank;
  }

  unsigned degree_;
  std::string name_;
  std::vector<Permutation> perms_;
  std::vector<Element> index_;
  std::vector<Element> inverse_;
};

/// Quaternion group {+-1, +-i, +-j, +-k}; encoding 2u + s with unit u in
/// (1, i, j, k) and sign bit s.
class QuaternionGroup {
public:
  std::uint64_t order() const { return 8; }
  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const {
    // kUnit[u][v] = (unit, sign) of u*v
    static constexpr std::array<std::array<std::array<unsigned, 2>, 4>, 4> kUnit{{
        {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
        {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},
        {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},
        {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},
    }};
    const auto [u, s] = kUnit[a / 2][b / 2];
    return 2 * u + ((a & 1) ^ (b & 1) ^ s);
  }
  Element inverse(Element a) const { return a < 2 ? a : a ^ 1; }
  std::string name() const { return "Q8"; }
};

/// The affine group of GF(p^r): pairs (a, k) acting as x -> g^k x + a with
/// g primitive. (a,k)(b,l) = (a + g^k b, k + l). Encoding a * (q-1) + k.
class FrobeniusFieldGroup {
public:
  FrobeniusFieldGroup(std::uint32_t p, unsigned r)
      : field_(std::make_shared<const FiniteField>(p, r)) {
    q_ = field_->size();
    const std::uint32_t units = q_ - 1;
    exp_.resize(units);
    log_.assign(q_, 0);
    FieldElement x = field_->one();
    for (std::uint32_t k = 0; k < units; ++k) {
      exp_[k] = x.code;
      log_[x.code] = k;
      x = field_->mul(x, field_->primitive_element());
    }
    if (p == 2) {
      add_.clear();
    } else if (std::uint64_t{q_} * q_ <= (1u << 16)) {
      add_.resize(std::size_t{q_} * q_);
      for (std::uint32_t a = 0; a < q_; ++a)
        for (std::uint32_t b = 0; b < q_; ++b) add_[std::size_t{a} * q_ + b] = field_->add({a}, {b}).code;
    }
  }

  std::uint64_t order() const { return std::uint64_t{q_} * (q_ - 1); }
  Element identity() const { return 0; }

  Element multiply(Element x, Element y) const {
    const std::uint64_t units = q_ - 1;
    const std::uint32_t a = static_cast<std::uint32_t>(x / units), k = static_cast<std::uint32_t>(x % units);
    const std::uint32_t b = static_cast<std::uint32_t>(y / units), l = static_cast<std::uint32_t>(y % units);
    const std::uint32_t gb = scale(k, b);
    return encode(add(a, gb), (k + l) % units);
  }

  Element inverse(Element x) const {
    const std::uint64_t units = q_ - 1;
    const std::uint32_t a = static_cast<std::uint32_t>(x / units), k = static_cast<std::uint32_t>(x % units);
    const std::uint32_t back = static_cast<std::uint32_t>((units - k) % units);
    return encode(field_->neg({scale(back, a)}).code, back);
  }

  std::string name() const {
    return "Frob(" + std::to_string(field_->characteristic()) + "," + std::to_string(field_->degree()) + ")";
  }

  const FiniteField& field() const { return *field_; }
  std::uint32_t field_size() const { return q_; }

  Element encode(std::uint32_t translation, std::uint64_t exponent) const {
    return std::uint64_t{translation} * (q_ - 1) + exponent;
  }
  /// x -> g^k x, a generator of the complement when k = 1.
  Element complement_element(std::uint64_t k) const { return encode(0, k % (q_ - 1)); }
  /// x -> x + a.
  Element kernel_element(std::uint32_t a) const { return encode(a, 0); }

private:
  std::uint32_t scale(std::uint32_t k, std::uint32_t b) const {
    if (b == 0) return 0;
    return exp_[(std::uint64_t{k} + log_[b]) % (q_ - 1)];
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (field_->characteristic() == 2) return a ^ b;
    if (!add_.empty()) return add_[std::size_t{a} * q_ + b];
    return field_->add({a}, {b}).code;
  }

  std::shared_ptr<const FiniteField> field_;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> add_;
};

/// Componentwise product with mixed-radix encoding, first factor most
/// significant.
class DirectProductGroup {
public:
  explicit DirectProductGroup(std::vector<AnyGroup> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("direct_product: at least one factor required");
    order_ = 1;
    for (const auto& f : factors_) {
      if (f.order() > (std::uint64_t{1} << 62) / order_)
        throw std::invalid_argument("direct_product: order overflows");
      order_ *= f.order();
    }
  }

  std::uint64_t order() const { return order_; }
  Element identity() const { return 0; }

  Element multiply(Element a, Element b) const {
    Element out = 0, scale = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      const auto m = factors_[i].order();
      out += factors_[i].multiply(a % m, b % m) * scale;
      a /= m;
      b /= m;
      scale *= m;
    }
    return out;
  }

  Element inverse(Element a) const {
    Element out = 0, scale = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      const auto m = factors_[i].order();
      out += factors_[i].inverse(a % m) * scale;
      a /= m;
      scale *= m;
    }
    return out;
  }

  std::string name() const {
    std::string s;
    for (const auto& f : factors_) {
      if (!s.empty()) s += "x";
      s += f.name();
    }
    return s;
  }

  const std::vector<AnyGroup>& factors() const { return factors_; }

  Element encode(std::span<const Element> components) const {
    if (components.size() != factors_.size()) throw std::invalid_argument("direct_product: wrong arity");
    Element out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      check_element(factors_[i], components[i]);
      out = out * factors_[i].order() + components[i];
    }
    return out;
  }

  std::vector<Element> decode(Element x) const {
    std::vector<Element> c(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
      c[i] = x % factors_[i].order();
      x /= factors_[i].order();
    }
    return c;
  }

private:
  std::vector<AnyGroup> factors_;
  std::uint64_t order_ = 1;
};

inline DirectProductGroup direct_product(std::vector<AnyGroup> factors) {
  return DirectProductGroup(std::move(factors));
}

// Named constructors with the catalog's parameter ranges.

inline CyclicGroup cyclic(std::uint64_t n) {
  if (n == 0 || n > kMaxNamedOrder) throw std::invalid_argument("cyclic: n must be in [1, 2^16]");
  return CyclicGroup(n);
}

/// Abelian group C_{n_1} x ... x C_{n_s}.
inline AnyGroup abelian_of_type(const std::vector<std::uint64_t>& cyclic_orders) {
  if (cyclic_orders.empty()) return cyclic(1);
  std::uint64_t total = 1;
  for (auto n : cyclic_orders) {
    if (n == 0) throw std::invalid_argument("abelian_of_type: factor orders must be positive");
    total *= n;
    if (total > kMaxNamedOrder) throw std::invalid_argument("abelian_of_type: order exceeds 2^16");
  }
  if (cyclic_orders.size() == 1) return cyclic(cyclic_orders[0]);
  std::vector<AnyGroup> factors;
  for (auto n : cyclic_orders) factors.emplace_back(CyclicGroup(n));
  return direct_product(std::move(factors));
}

/// Dihedral group of order 2n.
inline DihedralGroup dihedral(std::uint64_t n) {
  if (n == 0 || 2 * n > kMaxNamedOrder) throw std::invalid_argument("dihedral: n must be in [1, 2^15]");
  return DihedralGroup(n);
}

inline PermutationGroup symmetric(unsigned d) {
  if (d == 0 || d > kMaxPermutationDegree) throw std::invalid_argument("symmetric: degree must be in [1, 8]");
  std::vector<Permutation> gens;
  if (d >= 2) {
    Permutation swap(d), cycle(d);
    for (unsigned i = 0; i < d; ++i) {
      swap[i] = static_cast<std::uint8_t>(i);
      cycle[i] = static_cast<std::uint8_t>((i + 1) % d);
    }
    std::swap(swap[0], swap[1]);
    gens = {swap, cycle};
  }
  return PermutationGroup(d, gens, "S" + std::to_string(d));
}

inline PermutationGroup alternating(unsigned d) {
  if (d == 0 || d > kMaxPermutationDegree) throw std::invalid_argument("alternating: degree must be in [1, 8]");
  // 3-cycles (0 1 k) generate A_d.
  std::vector<Permutation> gens;
  for (unsigned k = 2; k < d; ++k) {
    Permutation c(d);
    for (unsigned i = 0; i < d; ++i) c[i] = static_cast<std::uint8_t>(i);
    c[0] = 1;
    c[1] = static_cast<std::uint8_t>(k);
    c[k] = 0;
    gens.push_back(c);
  }
  return PermutationGroup(d, gens, "A" + std::to_string(d));
}

inline QuaternionGroup quaternion8() { return {}; }

inline FrobeniusFieldGroup frobenius_field(std::uint32_t p, unsigned r) {
  return FrobeniusFieldGroup(p, r);
}

}  // namespace relorder
