#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "radram/holomorph.hpp"
#include "radram/ramfil.hpp"
#include "radram/report.hpp"

namespace radram {

enum class CheckStatus {
  Pass,
  Fail,
  Skip,   // beyond the order bound
  Known,  // a documented discrepancy, reproduced exactly as documented
  Note,   // informational observation, never a failure
};

[[nodiscard]] std::string to_string(CheckStatus s);

struct CheckResult {
  unsigned criterion = 0;  // acceptance criterion the check feeds
  std::string name;
  std::string subject;  // e.g. "(p=3, r=2, s=1) unit"
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerificationReport {
  std::uint64_t max_order = 0;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] std::size_t count(CheckStatus s) const;
  void append(const VerificationReport& other);
};

/// Class counts against brute-force orbits, serial and parallel.
[[nodiscard]] std::vector<CheckResult> check_classes(const GroupDesc& G, std::uint64_t max_order);
/// Degrees, both orthogonality relations, Frobenius induction (s = r) and lifts.
[[nodiscard]] std::vector<CheckResult> check_character_table(const GroupDesc& G, std::uint64_t max_order);
/// Kernels against null subgroups, literally and in descriptor form.
[[nodiscard]] std::vector<CheckResult> check_null_subgroups(const GroupDesc& G, std::uint64_t max_order);
/// Conductor exponents two ways, integrality, and discriminant triple agreement.
[[nodiscard]] std::vector<CheckResult> check_conductors(LocalCase kase, const GroupDesc& G);
/// Quotient by C(p^s) against the cyclotomic filtration; s = 0 also against the classical exponent.
[[nodiscard]] std::vector<CheckResult> check_cyclotomic(LocalCase kase, const GroupDesc& G);
/// Herbrand round trips, integral lower breaks, step breaks and the congruence-subgroup indices.
[[nodiscard]] std::vector<CheckResult> check_functoriality(LocalCase kase, const GroupDesc& G);
/// The global closed form against p^{r-s} times the local sum (unit case, m = p^r).
[[nodiscard]] std::vector<CheckResult> check_global_unit(const GroupDesc& G);

/// Every check for one (p, r, s): the unit case always, the Eisenstein case when s = r.
[[nodiscard]] VerificationReport verify_group(const GroupDesc& G, std::uint64_t max_order);
/// verify_group over p in primes, 1 <= r <= r_max, 0 <= s <= r, skipping groups above max_order.
[[nodiscard]] VerificationReport verify_range(const std::vector<std::uint64_t>& primes, unsigned r_max,
                                              std::uint64_t max_order);

[[nodiscard]] Json to_json(const CheckResult& c);
[[nodiscard]] Json to_json(const VerificationReport& r);

}  // namespace radram
