#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radram/arith.hpp"
#include "radram/chartab.hpp"
#include "radram/ramfil.hpp"

namespace radram {

struct ConductorRecord {
  Character character;
  Rational c_exp;  // -1 for the trivial character
  BigInt f_val;
  friend bool operator==(const ConductorRecord&, const ConductorRecord&) = default;
};

/// Largest upper break whose group is not inside the null subgroup of chi; -1 if chi is trivial.
[[nodiscard]] Rational c_exp_definitional(const Character& chi, const Filtration& upper);
[[nodiscard]] Rational c_exp_closed(unsigned lev, unsigned pr, LocalCase kase, std::uint64_t p);
[[nodiscard]] Rational c_exp_closed(const Character& chi, LocalCase kase, std::uint64_t p);

/// f = chi(1)(1 + c). Both routes to c must agree, and f must be a non-negative
/// integer; otherwise internal_error.
[[nodiscard]] ConductorRecord artin_conductor(const Character& chi, LocalCase kase, const Filtration& upper);
[[nodiscard]] ConductorRecord artin_conductor(const Character& chi, LocalCase kase, const GroupDesc& G);

/// One record per irreducible character, in character_table order.
[[nodiscard]] std::vector<ConductorRecord> conductor_table(LocalCase kase, const GroupDesc& G);

/// Sum of chi(1) f(chi) over the enumerated character table.
[[nodiscard]] BigInt disc_vp_local_sum(LocalCase kase, const GroupDesc& G);
/// The same sum taken over (level, pr) groups with count_by and the closed c.
[[nodiscard]] BigInt disc_vp_local_grouped(LocalCase kase, const GroupDesc& G);
/// Closed form; Eisenstein needs s = r. A non-integral value throws internal_error.
[[nodiscard]] BigInt disc_vp_local_closed(LocalCase kase, const GroupDesc& G);

/// Sum over integers u >= 0 of (|G_u| - 1).
[[nodiscard]] BigInt different_sum(const Filtration& lower);

struct PartialSum {
  std::string label;
  BigInt grouped;  // evaluated over the character groups
  BigInt closed;
};

/// Intermediate sums of the conductor-discriminant computation: the linear
/// characters, the induced characters at weight pr, and the extra 1/(p-1)
/// terms carried by characters with lev = pr (and lev = pr - 1 for Eisenstein).
[[nodiscard]] std::vector<PartialSum> partial_sums(LocalCase kase, const GroupDesc& G);

struct LocalDiscriminant {
  BigInt sum;
  std::string sum_method;  // "table" or "grouped"
  std::optional<BigInt> closed;
  BigInt different;
  friend bool operator==(const LocalDiscriminant&, const LocalDiscriminant&) = default;
  [[nodiscard]] bool agree() const { return sum == different && (!closed || *closed == sum); }
};

/// Characters enumerated above this count fall back to the grouped sum.
inline constexpr std::size_t kTableSumLimit = 200000;

[[nodiscard]] LocalDiscriminant local_discriminant(LocalCase kase, const GroupDesc& G);

/// Closed global form for Q(zeta_{p^r}, a^{1/p^r}) with p not dividing a.
[[nodiscard]] BigInt disc_vp_global_unit_closed(std::uint64_t p, unsigned r, unsigned s);
/// v_p of the discriminant of Q(zeta_m, a^{1/m}) over Q for m = p^r.
/// Unit: p^{r-s} times the local value, checked against the closed form.
/// Throws std::invalid_argument unless m is a power of p and the case is wild.
[[nodiscard]] BigInt disc_vp_global(const BigInt& m, const BigInt& a, std::uint64_t p);

}  // namespace radram
