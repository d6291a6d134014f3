#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace radram {

using BigInt = mpz_class;
using Rational = mpq_class;

/// p-adic valuation; INF is the valuation of 0 and exceeds every finite value.
class PAdicVal {
 public:
  constexpr PAdicVal() = default;
  constexpr explicit PAdicVal(unsigned v) : value_(v) {}

  static constexpr PAdicVal infinity() {
    PAdicVal v;
    v.infinite_ = true;
    return v;
  }

  [[nodiscard]] constexpr bool is_infinite() const { return infinite_; }
  /// Finite value; throws std::logic_error on INF.
  [[nodiscard]] unsigned value() const;
  /// min(v, bound), with INF mapped to bound.
  [[nodiscard]] constexpr unsigned clamp(unsigned bound) const {
    return infinite_ || value_ > bound ? bound : value_;
  }

  friend constexpr bool operator==(PAdicVal a, PAdicVal b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(PAdicVal a, PAdicVal b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend PAdicVal operator+(PAdicVal a, PAdicVal b);

  [[nodiscard]] std::string to_string() const;

 private:
  unsigned value_ = 0;
  bool infinite_ = false;
};

[[nodiscard]] bool is_prime(const BigInt& n);
[[nodiscard]] bool is_prime(std::uint64_t n);

/// Largest k with p^k | n. Throws std::invalid_argument if p is not prime.
[[nodiscard]] PAdicVal vp(const BigInt& n, std::uint64_t p);

/// Prime factorization of |n| (n != 0), primes ascending.
[[nodiscard]] std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);
[[nodiscard]] std::vector<std::uint64_t> prime_divisors(const BigInt& n);

[[nodiscard]] BigInt ipow(const BigInt& base, unsigned e);
[[nodiscard]] BigInt ipow(std::uint64_t base, unsigned e);
/// p^e as a machine word; throws unsupported_error past 2^62.
[[nodiscard]] std::uint64_t upow(std::uint64_t base, unsigned e);

[[nodiscard]] std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
[[nodiscard]] std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
[[nodiscard]] std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// Smallest primitive root modulo an odd prime p.
[[nodiscard]] std::uint64_t smallest_primitive_root(std::uint64_t p);

/// (Z/p^r)^* = <torsion_gen> x <principal_gen>, p odd.
struct UnitGroupDecomp {
  std::uint64_t p = 0;
  unsigned r = 0;
  std::uint64_t modulus = 0;        // p^r
  std::uint64_t torsion_gen = 0;    // g^{p^{r-1}} mod p^r, order p-1
  std::uint64_t principal_gen = 0;  // 1+p mod p^r, order p^{r-1}
  std::uint64_t torsion_order = 0;
  std::uint64_t principal_order = 0;

  friend bool operator==(const UnitGroupDecomp&, const UnitGroupDecomp&) = default;
};

[[nodiscard]] UnitGroupDecomp unit_decomp(std::uint64_t p, unsigned r);

/// Exponents (a mod p-1, b mod p^{r-1}) with torsion_gen^a * principal_gen^b = u.
struct UnitLog {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  friend bool operator==(const UnitLog&, const UnitLog&) = default;
};

[[nodiscard]] UnitLog discrete_log(std::uint64_t u, const UnitGroupDecomp& d);
[[nodiscard]] std::uint64_t unit_from_log(const UnitLog& l, const UnitGroupDecomp& d);

/// The s in [0, r] with a a p^{r-s}-th power in Q_p and, for s > 0, not a
/// p^{r-s+1}-th power. Requires p odd prime, p not dividing a, r >= 1.
[[nodiscard]] unsigned compute_s(const BigInt& a, std::uint64_t p, unsigned r);

/// "num/den" with den > 0, always including the denominator.
[[nodiscard]] std::string to_fraction_string(const Rational& q);
/// Accepts "num/den" or a bare integer.
[[nodiscard]] Rational parse_fraction(const std::string& text);

}  // namespace radram
