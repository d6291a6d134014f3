#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace radram {

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Computed once per n and cached for the life of the process.
[[nodiscard]] const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t n);

/// Element of Z[mu_N] stored as a length-N coefficient vector over the powers
/// of zeta_N. Arithmetic works in Z[x]/(x^N - 1); equality and integer tests
/// reduce modulo Phi_N. Coefficient overflow throws internal_error, so every
/// result is either exact or an error.
class CycInt {
 public:
  CycInt() = default;
  explicit CycInt(std::uint64_t order);
  CycInt(std::uint64_t order, std::vector<std::int64_t> coeffs);

  static CycInt integer(std::uint64_t order, std::int64_t n);
  /// c * zeta_N^e
  static CycInt monomial(std::uint64_t order, std::int64_t c, std::uint64_t e);

  [[nodiscard]] std::uint64_t order() const { return order_; }
  [[nodiscard]] std::span<const std::int64_t> coeffs() const { return coeffs_; }

  /// coeffs[e mod N] += c
  void add_term(std::int64_t c, std::uint64_t e);

  /// Canonical representative of degree < phi(N).
  [[nodiscard]] CycInt reduced() const;
  [[nodiscard]] bool is_reduced() const;
  [[nodiscard]] bool is_zero() const;
  /// The rational integer this element equals, if any.
  [[nodiscard]] std::optional<std::int64_t> as_integer() const;

  /// Complex conjugate: zeta^e -> zeta^{-e}.
  [[nodiscard]] CycInt conj() const;
  /// Divides every coefficient of the reduced form; throws internal_error if
  /// the division is not exact.
  [[nodiscard]] CycInt exact_div(std::int64_t d) const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  CycInt& operator*=(std::int64_t k);

  friend bool operator==(const CycInt& a, const CycInt& b);

  /// Human-readable sum such as "-1 + 2*z^3" (z = zeta_N) of the reduced form.
  [[nodiscard]] std::string to_string() const;

 private:
  void check_same_order(const CycInt& o) const;

  std::uint64_t order_ = 1;
  std::vector<std::int64_t> coeffs_{0};
};

[[nodiscard]] CycInt cyc_reduce(const CycInt& x);

/// The same element viewed in Z[mu_M] for a multiple M of x.order().
[[nodiscard]] CycInt embed(const CycInt& x, std::uint64_t order);

}  // namespace radram
