#pragma once

#include <json.hpp>

#include <optional>
#include <vector>

#include "radram/conductor.hpp"
#include "radram/ramfil.hpp"

namespace radram {

using Json = nlohmann::json;

/// Characters sharing (level, pr), which also share degree and conductor.
struct CharGroup {
  unsigned level = 0;
  unsigned prim_degree = 0;
  BigInt count;
  BigInt degree;
  Rational c_exp;
  BigInt f_val;
  friend bool operator==(const CharGroup&, const CharGroup&) = default;
};

struct PrimeBlock {
  PrimeLocalContext ctx;
  BigInt e_global;
  Filtration upper;
  Filtration lower;
  std::vector<CharGroup> characters;        // wild primes only
  std::vector<ConductorRecord> conductors;  // listed when the table is small
  std::optional<LocalDiscriminant> disc;
  std::optional<BigInt> disc_global;  // m a power of p
  friend bool operator==(const PrimeBlock&, const PrimeBlock&) = default;
};

struct Report {
  BigInt a;
  BigInt m;
  std::vector<Violation> violations;
  std::vector<PrimeBlock> primes;  // empty when violations is not
  friend bool operator==(const Report&, const Report&) = default;
};

/// Per-character conductors are listed up to this many characters.
inline constexpr std::uint64_t kConductorListLimit = 512;

[[nodiscard]] std::vector<CharGroup> character_groups(LocalCase kase, const GroupDesc& G);
[[nodiscard]] PrimeBlock analyze_prime(const BigInt& m, const BigInt& a, const GlobalPrime& gp);
/// Full analysis of Q(zeta_m, a^{1/m}); validation failures leave primes empty.
[[nodiscard]] Report analyze(const BigInt& m, const BigInt& a);

// Rationals are "num/den" strings; integers are JSON numbers when they fit in
// 64 bits and decimal strings otherwise.
[[nodiscard]] Json to_json(const BigInt& n);
[[nodiscard]] Json to_json(const Rational& q);
[[nodiscard]] Json to_json(const GroupDesc& G);
[[nodiscard]] Json to_json(const Character& chi);
[[nodiscard]] Json to_json(const Filtration& f);
[[nodiscard]] Json to_json(const PrimeLocalContext& ctx);
[[nodiscard]] Json to_json(const Violation& v);
[[nodiscard]] Json to_json(const ConductorRecord& c);
[[nodiscard]] Json to_json(const LocalDiscriminant& d);
[[nodiscard]] Json to_json(const CharGroup& g);
[[nodiscard]] Json to_json(const PrimeBlock& b);
[[nodiscard]] Json to_json(const Report& r);
[[nodiscard]] Json to_json(const CharacterTable& t);

// Inverses of the above; malformed documents throw std::invalid_argument.
[[nodiscard]] BigInt bigint_from_json(const Json& j);
[[nodiscard]] Rational rational_from_json(const Json& j);
[[nodiscard]] GroupDesc group_from_json(const Json& j);
[[nodiscard]] Character character_from_json(const Json& j);
[[nodiscard]] Filtration filtration_from_json(const Json& j);
[[nodiscard]] PrimeLocalContext context_from_json(const Json& j);
[[nodiscard]] Violation violation_from_json(const Json& j);
[[nodiscard]] ConductorRecord conductor_from_json(const Json& j);
[[nodiscard]] LocalDiscriminant discriminant_from_json(const Json& j);
[[nodiscard]] CharGroup char_group_from_json(const Json& j);
[[nodiscard]] PrimeBlock prime_block_from_json(const Json& j);
[[nodiscard]] Report report_from_json(const Json& j);

/// Two-space indented dump with sorted keys and a trailing newline.
[[nodiscard]] std::string dump(const Json& j);

/// Human-readable rendering of an analysis.
[[nodiscard]] std::string render(const Report& r);
[[nodiscard]] std::string render(const PrimeBlock& b);
[[nodiscard]] std::string render(const CharacterTable& t);

}  // namespace radram
