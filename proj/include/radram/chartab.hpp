#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "radram/arith.hpp"
#include "radram/cycint.hpp"
#include "radram/holomorph.hpp"

namespace radram {

/// C(p^x) x| G(p^r)^y inside C(p^s) x| G(p^r). G(p^r)^0 is all of G(p^r).
struct SubgroupDesc {
  unsigned x = 0;
  unsigned y = 0;
  friend bool operator==(const SubgroupDesc&, const SubgroupDesc&) = default;
};

/// y clamped to r; every trivial descriptor becomes (0, r).
[[nodiscard]] SubgroupDesc normalize(SubgroupDesc h, const GroupDesc& G);
[[nodiscard]] std::uint64_t subgroup_order(SubgroupDesc h, const GroupDesc& G);
[[nodiscard]] bool is_trivial(SubgroupDesc h, const GroupDesc& G);
/// a is a subgroup of b.
[[nodiscard]] bool contained_in(SubgroupDesc a, SubgroupDesc b, const GroupDesc& G);
[[nodiscard]] SubgroupDesc intersect(SubgroupDesc a, SubgroupDesc b, const GroupDesc& G);
/// The subgroup generated by a and b (their product set, as both are of this shape).
[[nodiscard]] SubgroupDesc product(SubgroupDesc a, SubgroupDesc b, const GroupDesc& G);
[[nodiscard]] bool is_normal(SubgroupDesc h, const GroupDesc& G);
[[nodiscard]] bool member(const HolomorphElement& g, SubgroupDesc h, const GroupDesc& G);
[[nodiscard]] std::string to_string(SubgroupDesc h);

enum class CharKind { Linear, Induced };

struct Character {
  CharKind kind = CharKind::Linear;
  unsigned k = 0;  // induction level; 0 for linear characters
  UnitLog twist;   // exponents (a, b) of the linear factor
  std::uint64_t degree = 1;
  unsigned level = 0;
  unsigned prim_degree = 0;

  [[nodiscard]] bool is_trivial() const { return kind == CharKind::Linear && twist == UnitLog{}; }
  friend bool operator==(const Character&, const Character&) = default;
};

/// c * zeta_N^e; every table entry has this shape.
struct Monomial {
  std::int64_t c = 0;
  std::uint64_t e = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Characters of C(p^s) x| G(p^r): the linear ones first, ordered by (a, b),
/// then the induced ones by (k, b).
[[nodiscard]] std::vector<Character> character_table(const GroupDesc& G);

/// Sum over tau in G(p^r) of zeta_{p^{s'}}^tau, reduced, in Z[mu_N] with N = p^r(p-1).
[[nodiscard]] CycInt rou_sum(unsigned s_prime, std::uint64_t p, unsigned r);

[[nodiscard]] Monomial char_value_monomial(const Character& chi, const ConjClass& c, const GroupDesc& G,
                                           const UnitGroupDecomp& d);
[[nodiscard]] CycInt char_value(const Character& chi, const ConjClass& c, const GroupDesc& G);

[[nodiscard]] unsigned level(const Character& chi);
/// Smallest t (t >= level) with the linear factor trivial on G(p^r)^t, found by scanning.
[[nodiscard]] unsigned prim_degree(const Character& chi, const GroupDesc& G);
[[nodiscard]] SubgroupDesc null_subgroup(const Character& chi, const GroupDesc& G);

/// Number of characters with the given level and primitive degree.
[[nodiscard]] std::uint64_t count_by(unsigned k, unsigned t, const GroupDesc& G);

/// Table values with classes in all_classes order.
struct CharacterTable {
  GroupDesc G;
  UnitGroupDecomp decomp;
  std::vector<ConjClass> classes;
  std::vector<Character> chars;
  std::vector<Monomial> values;  // chars.size() x classes.size(), row-major

  static CharacterTable build(const GroupDesc& G);
  [[nodiscard]] std::uint64_t ring_order() const { return G.value_ring(); }
  [[nodiscard]] const Monomial& at(std::size_t chi, std::size_t cls) const {
    return values[chi * classes.size() + cls];
  }
};

[[nodiscard]] std::string to_string(const Character& chi);

}  // namespace radram
