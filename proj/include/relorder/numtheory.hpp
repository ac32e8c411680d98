#pragma once

// Integer factorization, Mersenne exponents and the closed-form sums of
// element orders that depend only on the group order.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace relorder {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
class ExactRational {
public:
  ExactRational() = default;
  ExactRational(BigInt num) : value_(std::move(num)) {}  // NOLINT(implicit)
  ExactRational(long long num) : value_(num) {}          // NOLINT(implicit)
  ExactRational(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("ExactRational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    value_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
  }

  BigInt num() const { return boost::multiprecision::numerator(value_); }
  BigInt den() const { return boost::multiprecision::denominator(value_); }

  /// Approximate value, for display only.
  double to_double() const { return value_.convert_to<double>(); }

  std::string str() const {
    auto d = den();
    if (d == 1) return num().str();
    return num().str() + "/" + d.str();
  }

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    return ExactRational(a.value_ + b.value_);
  }
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
    return ExactRational(a.value_ - b.value_);
  }
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return ExactRational(a.value_ * b.value_);
  }
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.value_ == 0) throw std::domain_error("ExactRational: division by zero");
    return ExactRational(a.value_ / b.value_);
  }
  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) {
    return os << r.str();
  }

private:
  explicit ExactRational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

  boost::multiprecision::cpp_rational value_{0};
};

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = p_1^a_1 ... p_k^a_k with p_1 < ... < p_k; empty exactly when n = 1.
struct Factorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;

  std::uint64_t smallest_prime() const { return factors.front().prime; }
  std::uint64_t largest_prime() const { return factors.back().prime; }
};

/// Deterministic trial division.
inline Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  f.value = n;
  auto take = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) f.factors.push_back({p, e});
  };
  take(2);
  take(3);
  // 6k +- 1 wheel; p <= n / p avoids overflow of p * p.
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.factors.size() == 1 && f.factors[0].exponent == 1;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline BigInt big_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

/// True iff 2^r - 1 is prime. Lucas-Lehmer for prime r >= 3.
inline bool is_mersenne_exponent(unsigned r) {
  if (r < 2) throw std::invalid_argument("is_mersenne_exponent: r must be >= 2");
  if (r == 2) return true;
  if (!is_prime(r)) return false;  // 2^ab - 1 is divisible by 2^a - 1
  const BigInt m = (BigInt(1) << r) - 1;
  BigInt s = 4;
  for (unsigned i = 0; i < r - 2; ++i) {
    s = (s * s - 2) % m;
  }
  return s == 0;
}

/// Sum of element orders of the cyclic group of order n:
/// prod (p^(2a+1) + 1) / (p + 1).
inline BigInt psi_cyclic(const Factorization& f) {
  BigInt result = 1;
  for (const auto& [p, a] : f.factors) {
    BigInt num = big_pow(BigInt(p), 2 * a + 1) + 1;
    result *= num / (p + 1);
  }
  return result;
}

inline BigInt psi_cyclic(std::uint64_t n) { return psi_cyclic(factorize(n)); }

/// p_1 n^2 / (p_k + 1), a lower bound for psi_cyclic(n).
inline ExactRational psi_cyclic_lower_bound(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("psi_cyclic_lower_bound: n must be >= 2");
  auto f = factorize(n);
  BigInt nn = n;
  return ExactRational(BigInt(f.smallest_prime()) * nn * nn, BigInt(f.largest_prime() + 1));
}

/// (3*4^r - 9*2^r + 15) / (2*4^r + 1): the relative-order ratio of the
/// complement in the affine group of GF(2^r) when 2^r - 1 is prime.
inline ExactRational frobenius_ratio_closed_form(unsigned r) {
  if (r < 3) throw std::invalid_argument("frobenius_ratio_closed_form: r must be >= 3");
  const BigInt two_r = BigInt(1) << r;
  const BigInt four_r = two_r * two_r;
  return ExactRational(3 * four_r - 9 * two_r + 15, 2 * four_r + 1);
}

/// (q^2 - q + 1) / psi_cyclic(q).
inline ExactRational f_ratio(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("f_ratio: q must be >= 2");
  BigInt bq = q;
  return ExactRational(bq * bq - bq + 1, psi_cyclic(q));
}

}  // namespace relorder
