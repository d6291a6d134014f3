#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radram/arith.hpp"
#include "radram/chartab.hpp"
#include "radram/holomorph.hpp"

namespace radram {

enum class LocalCase { Unramified, Tame, Unit, Eisenstein };

[[nodiscard]] std::string to_string(LocalCase c);

/// Local data at one prime p of Q(zeta_m, a^{1/m}).
struct PrimeLocalContext {
  std::uint64_t p = 0;
  unsigned r = 0;         // v_p(m)
  unsigned vp_a = 0;      // v_p(a) before normalization
  LocalCase kase = LocalCase::Unramified;
  unsigned s = 0;         // Unit: from compute_s; Eisenstein: r
  std::optional<BigInt> g;      // primes above p; unset when not determined here
  BigInt e = 1;                 // ramification index of the p-part
  std::optional<BigInt> f_res;  // residue degree; unset when not determined here
  friend bool operator==(const PrimeLocalContext&, const PrimeLocalContext&) = default;

  /// C(p^s) x| G(p^r); only for the wild cases.
  [[nodiscard]] GroupDesc group() const;
  [[nodiscard]] bool wild() const { return kase == LocalCase::Unit || kase == LocalCase::Eisenstein; }
};

struct Violation {
  std::string code;     // "m_even", "perfect_power", "valuation_hypothesis", ...
  std::string message;
  std::optional<std::uint64_t> prime;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Hypothesis check on (m, a); an empty list means the input is admissible.
/// Throws std::invalid_argument for m < 1 or a in {0, 1, -1}.
[[nodiscard]] std::vector<Violation> validate(const BigInt& m, const BigInt& a);

/// Throws std::invalid_argument when the hypothesis fails at p.
[[nodiscard]] PrimeLocalContext classify_prime(std::uint64_t p, const BigInt& m, const BigInt& a);

enum class Numbering { Upper, Lower };

struct FiltStep {
  Rational brk;
  SubgroupDesc group;
  BigInt order;
  friend bool operator==(const FiltStep&, const FiltStep&) = default;
};

/// Decreasing step function: the group is steps[k].group on (steps[k-1].brk, steps[k].brk]
/// (on [0, steps[0].brk] for k = 0) and trivial above the last break.
struct Filtration {
  GroupDesc G;
  Numbering numbering = Numbering::Upper;
  std::vector<FiltStep> steps;
  /// Tame filtrations carry only a cyclic G_0 of this order; their groups are not descriptors.
  bool cyclic_only = false;

  /// Index of the step in force at v, or steps.size() when trivial.
  [[nodiscard]] std::size_t step_at(const Rational& v) const;
  [[nodiscard]] BigInt order_at(const Rational& v) const;
  /// Normalized descriptor at v; (0, r) when trivial.
  [[nodiscard]] SubgroupDesc group_at(const Rational& v) const;
  [[nodiscard]] BigInt top_order() const;
  friend bool operator==(const Filtration&, const Filtration&) = default;
};

/// Raw family entry before canonicalization.
struct FamilyEntry {
  Rational brk;
  SubgroupDesc group;
};

/// Clamps y, drops trivial groups, merges equal neighbours keeping the later
/// break, and demands strictly decreasing groups at strictly increasing breaks.
/// Failures throw internal_error naming the parameters.
[[nodiscard]] Filtration canonicalize(const GroupDesc& G, Numbering numbering,
                                      const std::vector<FamilyEntry>& entries);

/// The listed upper-numbering families, before canonicalization.
[[nodiscard]] std::vector<FamilyEntry> unit_upper_family(const GroupDesc& G);
[[nodiscard]] std::vector<FamilyEntry> eisenstein_upper_family(const GroupDesc& G);

[[nodiscard]] Filtration upper_filtration(const PrimeLocalContext& ctx);
/// Upper filtration of a wild case given directly by its group.
[[nodiscard]] Filtration upper_filtration(LocalCase kase, const GroupDesc& G);
/// Image under psi; throws internal_error on a non-integral break or a failed
/// listed-index membership claim.
[[nodiscard]] Filtration lower_filtration(const PrimeLocalContext& ctx);
[[nodiscard]] Filtration lower_filtration(LocalCase kase, const GroupDesc& G);

/// phi(u) = integral_0^u |G_t|/|G_0| dt.
[[nodiscard]] Rational herbrand_phi(const Filtration& lower, const Rational& u);
/// psi(v) = integral_0^v |G^0|/|G^w| dw.
[[nodiscard]] Rational herbrand_psi(const Filtration& upper, const Rational& v);
/// Renumber a filtration through psi (upper to lower) or phi (lower to upper).
[[nodiscard]] Filtration to_lower(const Filtration& upper);
[[nodiscard]] Filtration to_upper(const Filtration& lower);

[[nodiscard]] BigInt step_break(unsigned i, LocalCase kase, std::uint64_t p);

/// Lower numbering restricted to H: H_u = G_u intersect H.
[[nodiscard]] Filtration subgroup_filtration(const Filtration& lower, SubgroupDesc H);
/// Upper numbering of G/N: images G^v N / N at unchanged breaks, stored as the
/// subgroups G^v N with order |G^v N| / |N|. N must be normal.
[[nodiscard]] Filtration quotient_filtration(const Filtration& upper, SubgroupDesc N);

/// Lower break of the i-th step of the tower over Q_p(zeta_p), read off the
/// filtration by restriction to C(p^{s-i+1}) x| G^1 and passage to the quotient
/// by C(p^{s-i}) x| G^1.
[[nodiscard]] Rational step_break_from_filtration(LocalCase kase, const GroupDesc& G, unsigned i);

/// Lower-index statements "G_l = H" listed alongside the closed-form families.
struct IndexClaim {
  std::string label;
  Rational index;
  SubgroupDesc group;
  Numbering numbering = Numbering::Lower;
};

[[nodiscard]] std::vector<IndexClaim> listed_lower_claims(LocalCase kase, const GroupDesc& G);
/// Upper-numbering statements for the subgroup G(p^r)^1 of a Unit case.
[[nodiscard]] std::vector<IndexClaim> congruence_subgroup_claims(const GroupDesc& G);
/// First claim that fails as a membership statement, if any.
[[nodiscard]] std::optional<std::string> check_claims(const Filtration& f, const std::vector<IndexClaim>& claims);

struct GlobalPrime {
  PrimeLocalContext ctx;
  BigInt e_global;
};

struct GlobalRamification {
  BigInt m, a;
  std::vector<GlobalPrime> primes;  // every prime dividing m*a, ascending
};

/// Requires validate(m, a) to be empty.
[[nodiscard]] GlobalRamification global_ram(const BigInt& m, const BigInt& a);

[[nodiscard]] std::string to_string(const Filtration& f);

}  // namespace radram
