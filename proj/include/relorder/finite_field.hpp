#pragma once

// GF(p^r) in polynomial basis. Elements are identified with their canonical
// encoding sum c_i p^i (constant term first), so 0 and 1 are the additive and
// multiplicative identities.

#include "relorder/numtheory.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace relorder {

namespace poly {

// Dense polynomials over F_p, constant term first, no trailing zeros
// (the zero polynomial is the empty vector).
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

inline Poly sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  Poly out(acc.begin(), acc.end());
  trim(out);
  return out;
}

inline Poly mod(Poly a, const Poly& m, std::uint32_t p) {
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
    trim(a);
  }
  return a;
}

inline Poly gcd(Poly a, Poly b, std::uint32_t p) {
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, base, p), m, p);
    base = mod(mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

inline Poly decode(std::uint64_t code, std::uint32_t p) {
  Poly a;
  while (code > 0) {
    a.push_back(static_cast<std::uint32_t>(code % p));
    code /= p;
  }
  return a;
}

inline std::uint64_t encode(const Poly& a, std::uint32_t p) {
  std::uint64_t code = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) code = code * p + *it;
  return code;
}

/// gcd(f, x^(p^i) - x) = 1 for every i <= deg/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return false;
  const Poly x{0, 1};
  Poly frob = mod(x, f, p);  // x^(p^i) mod f
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    frob = powmod(frob, p, f, p);
    if (gcd(f, sub(frob, x, p), p).size() != 1) return false;
  }
  return true;
}

}  // namespace poly

inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

struct FieldElement {
  std::uint32_t code = 0;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// Monic irreducible polynomial of degree r over F_p with the smallest
/// base-p encoding.
inline poly::Poly find_irreducible(std::uint32_t p, unsigned r) {
  if (!is_prime(p)) throw std::invalid_argument("find_irreducible: p must be prime");
  if (r < 1) throw std::invalid_argument("find_irreducible: r must be >= 1");
  std::uint64_t lo = 1;
  for (unsigned i = 0; i < r; ++i) lo *= p;
  for (std::uint64_t code = lo; code < 2 * lo; ++code) {
    auto f = poly::decode(code, p);
    if (poly::is_irreducible(f, p)) return f;
  }
  throw std::logic_error("find_irreducible: no irreducible polynomial found");
}

class FiniteField {
public:
  FiniteField(std::uint32_t p, unsigned r) : p_(p), r_(r) {
    if (r < 1) throw std::invalid_argument("FiniteField: degree must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("FiniteField: characteristic must be prime");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < r; ++i) {
      q *= p;
      if (q > kMaxFieldSize) throw std::invalid_argument("FiniteField: p^r exceeds 2^20");
    }
    size_ = static_cast<std::uint32_t>(q);
    modulus_ = find_irreducible(p, r);
    primitive_ = find_primitive();
  }

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return r_; }
  std::uint32_t size() const { return size_; }
  const poly::Poly& modulus() const { return modulus_; }
  FieldElement primitive_element() const { return primitive_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }

  FieldElement element(std::uint64_t code) const {
    if (code >= size_) throw std::out_of_range("FiniteField: encoding out of range");
    return {static_cast<std::uint32_t>(code)};
  }

  /// Coefficients c_0..c_{r-1} of the polynomial representative.
  std::vector<std::uint32_t> coefficients(FieldElement a) const {
    std::vector<std::uint32_t> c(r_, 0);
    for (unsigned i = 0; i < r_; ++i) {
      c[i] = a.code % p_;
      a.code /= p_;
    }
    return c;
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < r_; ++i) {
      out += ((a.code % p_ + b.code % p_) % p_) * scale;
      a.code /= p_;
      b.code /= p_;
      scale *= p_;
    }
    return {out};
  }

  FieldElement neg(FieldElement a) const {
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < r_; ++i) {
      out += ((p_ - a.code % p_) % p_) * scale;
      a.code /= p_;
      scale *= p_;
    }
    return {out};
  }

  FieldElement mul(FieldElement a, FieldElement b) const {
    auto prod = poly::mod(poly::mul(poly::decode(a.code, p_), poly::decode(b.code, p_), p_), modulus_, p_);
    return {static_cast<std::uint32_t>(poly::encode(prod, p_))};
  }

  FieldElement pow(FieldElement a, std::uint64_t e) const {
    FieldElement result = one();
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  /// Throws std::domain_error on zero.
  FieldElement inv(FieldElement a) const {
    if (a.code == 0) throw std::domain_error("FiniteField: inverse of zero");
    return pow(a, size_ - 2);
  }

  std::uint64_t multiplicative_order(FieldElement a) const {
    if (a.code == 0) throw std::domain_error("FiniteField: zero has no multiplicative order");
    std::uint64_t order = size_ - 1;
    for (const auto& [prime, e] : factorize(size_ - 1).factors) {
      for (unsigned i = 0; i < e && order % prime == 0; ++i) {
        if (pow(a, order / prime) != one()) break;
        order /= prime;
      }
    }
    return order;
  }

private:
  FieldElement find_primitive() const {
    for (std::uint32_t c = 1; c < size_; ++c) {
      if (multiplicative_order({c}) == size_ - 1) return {c};
    }
    throw std::logic_error("FiniteField: no primitive element");
  }

  std::uint32_t p_;
  unsigned r_;
  std::uint32_t size_ = 0;
  poly::Poly modulus_;
  FieldElement primitive_;
};

inline FieldElement find_primitive_element(const FiniteField& field) { return field.primitive_element(); }

}  // namespace relorder
