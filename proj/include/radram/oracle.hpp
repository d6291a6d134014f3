#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radram/chartab.hpp"
#include "radram/cycint.hpp"
#include "radram/holomorph.hpp"

namespace radram {

inline constexpr std::uint64_t kDefaultMaxOrder = 100000;

/// RADICAL_RAM_MAX_ORDER if set to a positive integer, otherwise kDefaultMaxOrder.
[[nodiscard]] std::uint64_t max_order_from_env();

/// Dense numbering of the elements of G: index = unit_position(u) * p^s + i.
class ElementIndex {
 public:
  explicit ElementIndex(const GroupDesc& G);

  [[nodiscard]] const GroupDesc& group() const { return G_; }
  [[nodiscard]] std::uint64_t size() const { return units_.size() * ps_; }
  [[nodiscard]] std::uint64_t index(const HolomorphElement& g) const { return unit_pos_[g.u] * ps_ + g.i; }
  [[nodiscard]] HolomorphElement element(std::uint64_t idx) const { return {idx % ps_, units_[idx / ps_]}; }
  [[nodiscard]] const std::vector<std::uint64_t>& units() const { return units_; }
  [[nodiscard]] std::uint64_t fiber_size() const { return ps_; }

 private:
  GroupDesc G_;
  std::uint64_t ps_;
  std::vector<std::uint64_t> units_;
  std::vector<std::uint64_t> unit_pos_;
};

/// Conjugation orbits: label[idx] is the smallest element index in the orbit of idx.
struct Partition {
  std::vector<std::uint64_t> label;
  std::uint64_t orbit_count = 0;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Orbits under conjugation by z, the torsion generator and 1+p, found by a
/// breadth-first search over the whole group. Throws resource_limit_error when
/// |G| exceeds max_order.
[[nodiscard]] Partition classes_bruteforce(const GroupDesc& G, std::uint64_t max_order = kDefaultMaxOrder);
/// Same orbits, searched independently per fiber {z^i sigma_u : i} in parallel.
[[nodiscard]] Partition classes_bruteforce_parallel(const GroupDesc& G,
                                                    std::uint64_t max_order = kDefaultMaxOrder);
/// Orbits as element lists, each sorted, ordered by smallest element index.
[[nodiscard]] std::vector<std::vector<HolomorphElement>> orbits(const Partition& part, const ElementIndex& idx);

/// Values indexed like all_classes(G).
struct DenseClassFunction {
  GroupDesc G;
  std::vector<CycInt> values;
};

[[nodiscard]] DenseClassFunction to_class_function(const CharacterTable& t, std::size_t chi);

/// Induction to C(p^r) x| G(p^r) of z -> zeta_{p^r} on C(p^r), evaluated from
/// |H|^{-1} sum_x [x g x^{-1} in H] theta(x g x^{-1}). Requires s = r.
[[nodiscard]] DenseClassFunction induce_from_cyclic(const GroupDesc& G,
                                                    std::uint64_t max_order = kDefaultMaxOrder);

/// (1/|G|) sum_c |c| f(c) conj(g(c)); throws internal_error if the division is inexact.
[[nodiscard]] CycInt inner_product(const DenseClassFunction& f, const DenseClassFunction& g);

struct CheckOutcome {
  bool passed = true;
  std::string detail;  // first counterexample on failure
};

/// Pullbacks of table characters along C(p^r) x| G(p^r) -> G (z-quotient) and
/// along G -> C(p^s') x| G(p^{r-1}) (reduction of sigma), for level-k rows.
/// k = 0 covers the linear characters.
[[nodiscard]] CheckOutcome lift_check(const GroupDesc& G, unsigned k);

/// Inner-product matrix of the table against the identity, accumulated in
/// Z[mu_N] and reduced once per entry.
[[nodiscard]] CheckOutcome row_orthogonality(const CharacterTable& t);
[[nodiscard]] CheckOutcome row_orthogonality_parallel(const CharacterTable& t);
[[nodiscard]] CheckOutcome column_orthogonality(const CharacterTable& t, bool parallel = true);

struct NullSubgroupAudit {
  /// {g : chi(g) = chi(1)} equals null_subgroup(chi) for every character.
  CheckOutcome literal;
  /// For every character: null_subgroup(chi) is the largest descriptor
  /// subgroup inside the kernel and agrees with the kernel on
  /// C(p^s) x| G(p^r)^1; for induced characters the kernel equals it outright.
  CheckOutcome descriptor;
  std::size_t literal_mismatches = 0;  // characters whose kernel has no descriptor shape
  std::size_t characters = 0;
};

/// Kernels found element by element, compared with null_subgroup.
[[nodiscard]] NullSubgroupAudit null_subgroups_bruteforce(const CharacterTable& t,
                                                          std::uint64_t max_order = kDefaultMaxOrder);

/// Orbit partition against all_classes: one representative per orbit, equal
/// sizes, conj_class_of constant on orbits.
[[nodiscard]] CheckOutcome compare_partition(const GroupDesc& G, const Partition& part);

}  // namespace radram
