#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace radram {

/// C(p^s) x| G(p^r) with G(p^r) acting on C(p^s) through reduction mod p^s.
struct GroupDesc {
  std::uint64_t p = 3;
  unsigned r = 1;
  unsigned s = 1;

  /// Validates p odd prime, r >= 1, 0 <= s <= r.
  static GroupDesc make(std::uint64_t p, unsigned r, unsigned s);

  [[nodiscard]] std::uint64_t pr() const;      // p^r
  [[nodiscard]] std::uint64_t ps() const;      // p^s
  [[nodiscard]] std::uint64_t units() const;   // p^{r-1}(p-1)
  [[nodiscard]] std::uint64_t order() const;   // p^s p^{r-1}(p-1)
  /// Ring order p^r(p-1) holding every character value.
  [[nodiscard]] std::uint64_t value_ring() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const GroupDesc&, const GroupDesc&) = default;
};

/// z^i sigma_u
struct HolomorphElement {
  std::uint64_t i = 0;
  std::uint64_t u = 1;
  friend bool operator==(const HolomorphElement&, const HolomorphElement&) = default;
  friend auto operator<=>(const HolomorphElement&, const HolomorphElement&) = default;
};

struct ConjClass {
  unsigned alpha = 0;  // min(v_p(u-1), r)
  unsigned beta = 0;   // min(v_p(i), alpha, s)
  HolomorphElement rep;
  std::uint64_t size = 1;

  friend bool operator==(const ConjClass&, const ConjClass&) = default;
};

[[nodiscard]] bool is_valid(const HolomorphElement& g, const GroupDesc& G);
[[nodiscard]] HolomorphElement identity();
/// Throws std::invalid_argument unless both elements lie in G.
[[nodiscard]] HolomorphElement mul(const HolomorphElement& g, const HolomorphElement& h, const GroupDesc& G);
[[nodiscard]] HolomorphElement inv(const HolomorphElement& g, const GroupDesc& G);

[[nodiscard]] ConjClass conj_class_of(const HolomorphElement& g, const GroupDesc& G);
/// Sorted by (alpha, beta, u).
[[nodiscard]] std::vector<ConjClass> all_classes(const GroupDesc& G);
[[nodiscard]] std::uint64_t class_count(const GroupDesc& G);

/// The units mod p^r in increasing order.
[[nodiscard]] std::vector<std::uint64_t> unit_residues(const GroupDesc& G);

/// min(v_p(n), cap) for a machine word, with n = 0 mapped to cap.
[[nodiscard]] unsigned vp_clamped(std::uint64_t n, std::uint64_t p, unsigned cap);

}  // namespace radram
