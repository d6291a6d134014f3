#include "radram/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <random>

#include "radram/conductor.hpp"
#include "radram/errors.hpp"
#include "radram/oracle.hpp"

namespace radram {

namespace {

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

std::string subject(const GroupDesc& G, std::optional<LocalCase> kase = std::nullopt) {
  return kase ? G.to_string() + " " + to_string(*kase) : G.to_string();
}

CheckResult outcome(unsigned crit, std::string name, std::string subj, const CheckOutcome& o) {
  return {crit, std::move(name), std::move(subj), o.passed ? CheckStatus::Pass : CheckStatus::Fail, o.detail};
}

CheckResult pass_if(unsigned crit, std::string name, std::string subj, bool ok, std::string detail) {
  return {crit, std::move(name), std::move(subj), ok ? CheckStatus::Pass : CheckStatus::Fail,
          ok ? std::string() : std::move(detail)};
}

// Runs body, turning a thrown exception into a failed check of the given name.
void guarded(std::vector<CheckResult>& out, unsigned crit, const std::string& name, const std::string& subj,
             const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    out.push_back({crit, name, subj, CheckStatus::Fail, e.what()});
  }
}

CheckResult skipped(unsigned crit, std::string name, const GroupDesc& G, std::uint64_t bound) {
  return {crit, std::move(name), subject(G), CheckStatus::Skip,
          "|G| = " + std::to_string(G.order()) + " exceeds the order bound " + std::to_string(bound)};
}

std::uint64_t seed_for(LocalCase kase, const GroupDesc& G) {
  return (G.p * 1000003u + G.r * 1009u + G.s) * 2 + (kase == LocalCase::Eisenstein ? 1 : 0);
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
    case CheckStatus::Known: return "known_discrepancy";
    case CheckStatus::Note: return "note";
  }
  return "?";
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::vector<CheckResult> check_classes(const GroupDesc& G, std::uint64_t max_order) {
  std::vector<CheckResult> out;
  if (G.order() > max_order) return {skipped(1, "class_count", G, max_order)};
  const std::string subj = subject(G);
  guarded(out, 1, "class_count", subj, [&] {
    const Partition serial = classes_bruteforce(G, max_order);
    const Partition parallel = classes_bruteforce_parallel(G, max_order);
    const std::uint64_t formula = class_count(G);
    const std::size_t listed = all_classes(G).size();
    out.push_back(pass_if(1, "class_count", subj, serial.orbit_count == formula && listed == formula,
                          "orbits " + std::to_string(serial.orbit_count) + ", formula " + std::to_string(formula) +
                              ", listed " + std::to_string(listed)));
    out.push_back(pass_if(1, "orbits_parallel_equal_serial", subj, parallel == serial,
                          "parallel orbit labels differ from the serial search"));
    out.push_back(outcome(1, "orbits_match_classes", subj, compare_partition(G, serial)));
  });
  return out;
}

std::vector<CheckResult> check_character_table(const GroupDesc& G, std::uint64_t max_order) {
  std::vector<CheckResult> out;
  if (G.order() > max_order) return {skipped(2, "character_table", G, max_order)};
  const std::string subj = subject(G);
  guarded(out, 2, "character_table", subj, [&] {
    const CharacterTable t = CharacterTable::build(G);
    BigInt sq = 0;
    for (const auto& chi : t.chars) sq += big(chi.degree) * big(chi.degree);
    out.push_back(pass_if(2, "sum_degree_squares", subj, sq == big(G.order()) && t.chars.size() == t.classes.size(),
                          "sum of squares " + sq.get_str() + ", |G| = " + std::to_string(G.order()) + ", " +
                              std::to_string(t.chars.size()) + " characters for " + std::to_string(t.classes.size()) +
                              " classes"));
    out.push_back(outcome(2, "row_orthogonality", subj, row_orthogonality_parallel(t)));
    out.push_back(outcome(2, "column_orthogonality", subj, column_orthogonality(t, true)));
    if (G.s == G.r) {
      const DenseClassFunction f = induce_from_cyclic(G, max_order);
      std::size_t top = t.chars.size();
      for (std::size_t i = 0; i < t.chars.size(); ++i)
        if (t.chars[i].kind == CharKind::Induced && t.chars[i].k == G.r && t.chars[i].twist == UnitLog{}) top = i;
      CheckOutcome o;
      if (top == t.chars.size()) o = {false, "no induced character of level r with trivial twist"};
      else {
        const DenseClassFunction row = to_class_function(t, top);
        for (std::size_t c = 0; c < t.classes.size() && o.passed; ++c)
          if (!(row.values[c] == f.values[c]))
            o = {false, "class " + std::to_string(c) + ": table " + row.values[c].to_string() + ", induced " +
                            f.values[c].to_string()};
      }
      out.push_back(outcome(2, "frobenius_induction", subj, o));
    }
    for (unsigned k = 0; k <= G.s; ++k)
      out.push_back(outcome(2, "lift_level_" + std::to_string(k), subj, lift_check(G, k)));
  });
  return out;
}

std::vector<CheckResult> check_null_subgroups(const GroupDesc& G, std::uint64_t max_order) {
  std::vector<CheckResult> out;
  if (G.order() > max_order) return {skipped(3, "null_subgroup", G, max_order)};
  const std::string subj = subject(G);
  guarded(out, 3, "null_subgroup", subj, [&] {
    const CharacterTable t = CharacterTable::build(G);
    const NullSubgroupAudit a = null_subgroups_bruteforce(t, max_order);
    out.push_back(outcome(3, "null_subgroup_descriptor", subj, a.descriptor));
    CheckResult lit = outcome(3, "null_subgroup_literal", subj, a.literal);
    if (!a.literal.passed && a.descriptor.passed && a.literal_mismatches > 0) {
      lit.status = CheckStatus::Known;
      lit.detail = std::to_string(a.literal_mismatches) + " of " + std::to_string(a.characters) +
                   " kernels are not of the form C(p^x) x| G^y; first: " + a.literal.detail;
    }
    out.push_back(lit);
  });
  return out;
}

std::vector<CheckResult> check_conductors(LocalCase kase, const GroupDesc& G) {
  std::vector<CheckResult> out;
  const std::string subj = subject(G, kase);
  guarded(out, 4, "conductors", subj, [&] {
    const auto table = conductor_table(kase, G);
    bool ok = true;
    std::string detail;
    for (const auto& rec : table)
      if (rec.f_val < 0 || (rec.f_val == 0) != rec.character.is_trivial()) {
        ok = false;
        detail = to_string(rec.character) + " has f = " + rec.f_val.get_str();
        break;
      }
    out.push_back(pass_if(4, "conductor_exponents", subj, ok, detail));
  });
  guarded(out, 5, "discriminant", subj, [&] {
    const LocalDiscriminant d = local_discriminant(kase, G);
    const BigInt grouped = disc_vp_local_grouped(kase, G);
    out.push_back(pass_if(5, "discriminant_triple", subj, d.agree() && d.closed && grouped == d.sum,
                          "sum " + d.sum.get_str() + ", grouped " + grouped.get_str() + ", closed " +
                              (d.closed ? d.closed->get_str() : "n/a") + ", different " + d.different.get_str()));
    bool ok = true;
    std::string detail;
    for (const auto& ps : partial_sums(kase, G))
      if (ps.grouped != ps.closed) {
        ok = false;
        detail = ps.label + ": grouped " + ps.grouped.get_str() + ", closed " + ps.closed.get_str();
        break;
      }
    out.push_back(pass_if(5, "discriminant_partial_sums", subj, ok, detail));
  });
  return out;
}

std::vector<CheckResult> check_cyclotomic(LocalCase kase, const GroupDesc& G) {
  std::vector<CheckResult> out;
  const std::string subj = subject(G, kase);
  guarded(out, 6, "cyclotomic", subj, [&] {
    const BigInt p = big(G.p);
    if (kase == LocalCase::Unit && G.s == 0) {
      const BigInt classical = G.r * ipow(p, G.r) - (G.r + 1) * ipow(p, G.r - 1);
      const BigInt closed = disc_vp_local_closed(kase, G);
      const BigInt diff = different_sum(lower_filtration(kase, G));
      out.push_back(pass_if(6, "cyclotomic_discriminant", subj, closed == classical && diff == classical,
                            "classical " + classical.get_str() + ", closed " + closed.get_str() + ", different " +
                                diff.get_str()));
    }
    const Filtration q = quotient_filtration(upper_filtration(kase, G), {G.s, G.r});
    const Filtration cyc = upper_filtration(LocalCase::Unit, GroupDesc::make(G.p, G.r, 0));
    bool ok = q.steps.size() == cyc.steps.size();
    for (std::size_t k = 0; ok && k < q.steps.size(); ++k)
      ok = q.steps[k].brk == cyc.steps[k].brk && q.steps[k].order == cyc.steps[k].order &&
           q.steps[k].group.y == cyc.steps[k].group.y;
    const Filtration ql = to_lower(q);
    for (std::size_t k = 1; ok && k < ql.steps.size(); ++k) ok = ql.steps[k].brk == Rational(ipow(p, k) - 1);
    out.push_back(pass_if(6, "cyclotomic_quotient", subj, ok, "quotient " + to_string(q) + " vs " + to_string(cyc)));
  });
  return out;
}

std::vector<CheckResult> check_functoriality(LocalCase kase, const GroupDesc& G) {
  std::vector<CheckResult> out;
  const std::string subj = subject(G, kase);
  guarded(out, 7, "functoriality", subj, [&] {
    const Filtration up = upper_filtration(kase, G);
    const Filtration lo = lower_filtration(kase, G);  // also asserts the listed lower indices
    bool integral = std::all_of(lo.steps.begin(), lo.steps.end(), [](const FiltStep& s) { return s.brk.get_den() == 1; });
    out.push_back(pass_if(7, "lower_breaks_integral", subj, integral, to_string(lo)));

    std::string bad;
    auto round_trip = [&](const Rational& v) {
      if (bad.empty() && herbrand_phi(lo, herbrand_psi(up, v)) != v)
        bad = "phi(psi(" + to_fraction_string(v) + ")) != itself";
      if (bad.empty() && herbrand_psi(up, herbrand_phi(lo, v)) != v)
        bad = "psi(phi(" + to_fraction_string(v) + ")) != itself";
    };
    for (const auto& st : up.steps) round_trip(st.brk);
    for (const auto& st : lo.steps) round_trip(st.brk);
    std::mt19937_64 rng(seed_for(kase, G));
    const Rational top = lo.steps.empty() ? Rational(1) : lo.steps.back().brk;
    std::uniform_int_distribution<unsigned long> den(1, 2 * (G.p - 1) * G.p);
    for (int t = 0; t < 100; ++t) {
      const unsigned long d = den(rng);
      const BigInt hi = (2 * top.get_num() / top.get_den() + 3) * d;
      std::uniform_int_distribution<unsigned long> num(0, hi.get_ui());
      Rational v(num(rng), d);
      v.canonicalize();
      round_trip(v);
    }
    out.push_back(pass_if(7, "herbrand_round_trip", subj, bad.empty(), bad));

    if (kase == LocalCase::Unit || G.s == G.r) {
      std::string miss;
      for (unsigned i = 1; i <= G.s && miss.empty(); ++i) {
        const Rational got = step_break_from_filtration(kase, G, i);
        const BigInt want = step_break(i, kase, G.p);
        if (got != Rational(want))
          miss = "step " + std::to_string(i) + ": filtration gives " + to_fraction_string(got) + ", expected " +
                 want.get_str();
      }
      out.push_back(pass_if(7, "step_breaks", subj, miss.empty(), miss));
    }
    if (kase == LocalCase::Unit) {
      const Filtration sub = subgroup_filtration(lo, {0, 1});
      const auto claims = congruence_subgroup_claims(G);
      auto fail = check_claims(sub, claims);
      if (!fail) fail = check_claims(to_upper(sub), claims);
      out.push_back(pass_if(7, "congruence_subgroup_indices", subj, !fail, fail.value_or("")));
      if (G.s == G.r) {
        // The listed pair for G^s names the trivial group at a lower index past the last break.
        const BigInt p = big(G.p);
        const Rational listed((p - 1) * (ipow(p, 2 * G.s) - 1), p + 1);
        out.push_back({7, "listed_index_not_tight", subj, CheckStatus::Note,
                       "G^" + std::to_string(G.s) + " = 1 listed at lower index " + to_fraction_string(listed) +
                           "; last lower break is " + to_fraction_string(lo.steps.back().brk) +
                           " (upper " + to_fraction_string(up.steps.back().brk) + ")"});
      }
    }
  });
  return out;
}

std::vector<CheckResult> check_global_unit(const GroupDesc& G) {
  std::vector<CheckResult> out;
  const std::string subj = subject(G, LocalCase::Unit);
  guarded(out, 8, "global_discriminant", subj, [&] {
    const BigInt p = big(G.p);
    const BigInt closed = disc_vp_global_unit_closed(G.p, G.r, G.s);
    const BigInt via_local = ipow(p, G.r - G.s) * disc_vp_local_sum(LocalCase::Unit, G);
    // A radicand realizing this s.
    std::optional<BigInt> a;
    const BigInt limit = ipow(p, G.r + 2) + 2;
    for (BigInt c = 2; c <= limit && !a; ++c)
      if (c % p != 0 && compute_s(c, G.p, G.r) == G.s) a = c;
    std::string detail = "closed " + closed.get_str() + ", p^{r-s} * local " + via_local.get_str();
    bool ok = closed == via_local;
    if (a) {
      const BigInt global = disc_vp_global(ipow(p, G.r), *a, G.p);
      detail += ", a = " + a->get_str() + " gives " + global.get_str();
      ok = ok && global == closed;
    } else {
      ok = false;
      detail += ", no radicand found";
    }
    out.push_back(pass_if(8, "global_unit_discriminant", subj, ok, detail));
  });
  return out;
}

VerificationReport verify_group(const GroupDesc& G, std::uint64_t max_order) {
  VerificationReport rep;
  rep.max_order = max_order;
  auto add = [&](std::vector<CheckResult> v) { rep.checks.insert(rep.checks.end(), v.begin(), v.end()); };
  add(check_classes(G, max_order));
  add(check_character_table(G, max_order));
  add(check_null_subgroups(G, max_order));
  std::vector<LocalCase> cases{LocalCase::Unit};
  if (G.s == G.r) cases.push_back(LocalCase::Eisenstein);
  for (LocalCase kase : cases) {
    if (G.order() > max_order) {
      rep.checks.push_back(skipped(4, "conductors", G, max_order));
      continue;
    }
    add(check_conductors(kase, G));
    add(check_cyclotomic(kase, G));
    add(check_functoriality(kase, G));
  }
  if (G.order() <= max_order) add(check_global_unit(G));
  return rep;
}

VerificationReport verify_range(const std::vector<std::uint64_t>& primes, unsigned r_max, std::uint64_t max_order) {
  VerificationReport rep;
  rep.max_order = max_order;
  for (std::uint64_t p : primes)
    for (unsigned r = 1; r <= r_max; ++r)
      for (unsigned s = 0; s <= r; ++s) {
        const GroupDesc G = GroupDesc::make(p, r, s);
        if (G.order() > max_order) {
          rep.checks.push_back(skipped(0, "group", G, max_order));
          continue;
        }
        rep.append(verify_group(G, max_order));
      }
  return rep;
}

Json to_json(const CheckResult& c) {
  return Json{{"criterion", c.criterion},
              {"name", c.name},
              {"subject", c.subject},
              {"status", to_string(c.status)},
              {"detail", c.detail}};
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  Json summary;
  for (CheckStatus s : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Skip, CheckStatus::Known, CheckStatus::Note})
    summary[to_string(s)] = r.count(s);
  return Json{{"max_order", r.max_order}, {"passed", r.passed()}, {"summary", summary}, {"checks", checks}};
}

}  // namespace radram
