// One line per acceptance criterion; exit status 0 when every criterion holds
// or fails only in the way recorded for it in the README.

#include <chrono>
#include <iostream>
#include <sstream>

#include "radram/cli.hpp"
#include "radram/conductor.hpp"
#include "radram/oracle.hpp"
#include "radram/report.hpp"
#include "radram/verify.hpp"

using namespace radram;

namespace {

struct Line {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

struct Tally {
  std::size_t groups = 0, checks = 0, known = 0, notes = 0;
  std::string first_failure;
};

void absorb(Tally& t, const std::vector<CheckResult>& rs) {
  for (const auto& c : rs) {
    ++t.checks;
    if (c.status == CheckStatus::Known) ++t.known;
    if (c.status == CheckStatus::Note) ++t.notes;
    if (c.status == CheckStatus::Fail && t.first_failure.empty())
      t.first_failure = c.name + " " + c.subject + ": " + c.detail;
  }
}

void print(unsigned n, const std::string& title, const Line& l, const std::string& summary) {
  std::cout << "AC" << n << " " << (l.pass ? "PASS" : "FAIL") << "  " << title << ": " << (l.pass ? summary : l.detail)
            << "\n";
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<GroupDesc> range() {
  std::vector<GroupDesc> out;
  for (std::uint64_t p : {3u, 5u, 7u})
    for (unsigned r = 1; r <= 3; ++r)
      for (unsigned s = 0; s <= r; ++s) {
        const GroupDesc G = GroupDesc::make(p, r, s);
        if (G.order() <= kDefaultMaxOrder) out.push_back(G);
      }
  return out;
}

std::vector<LocalCase> cases_for(const GroupDesc& G) {
  if (G.s == G.r) return {LocalCase::Unit, LocalCase::Eisenstein};
  return {LocalCase::Unit};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << v;
  return os.str();
}

// {u : psi(u) = psi(1)} for the linear character with twist (0, 1) on G(p^r).
std::vector<std::uint64_t> torsion_meeting_kernel(const GroupDesc& G) {
  const CharacterTable t = CharacterTable::build(G);
  std::size_t chi = t.chars.size();
  for (std::size_t i = 0; i < t.chars.size(); ++i)
    if (t.chars[i].kind == CharKind::Linear && t.chars[i].twist == UnitLog{0, 1}) chi = i;
  std::vector<std::uint64_t> out;
  if (chi == t.chars.size()) return out;
  const CycInt one = char_value(t.chars[chi], conj_class_of({0, 1}, G), G);
  for (std::uint64_t u : unit_residues(G))
    if (char_value(t.chars[chi], conj_class_of({0, u}, G), G) == one) out.push_back(u);
  return out;
}

}  // namespace

int main() {
  const auto groups = range();
  std::vector<Line> lines(10);
  std::vector<Tally> tally(10);
  bool ac3_as_documented = false;

  // 1
  {
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& G : groups) absorb(tally[1], check_classes(G, kDefaultMaxOrder));
    const double secs = seconds_since(t0);
    lines[1].require(tally[1].first_failure.empty(), tally[1].first_failure);
    lines[1].require(secs < 60, "class suite took " + fixed(secs) + " s");
    print(1, "class counts", lines[1],
          std::to_string(groups.size()) + " groups, " + std::to_string(tally[1].checks) + " checks, " + fixed(secs) +
              " s");
  }
  // 2
  {
    for (const auto& G : groups) absorb(tally[2], check_character_table(G, kDefaultMaxOrder));
    lines[2].require(tally[2].first_failure.empty(), tally[2].first_failure);
    print(2, "character tables", lines[2],
          std::to_string(tally[2].checks) + " checks (degrees, both orthogonality relations, induction, lifts)");
  }
  // 3
  {
    std::size_t literal_fail = 0, literal_groups = 0;
    bool descriptor_ok = true, unexpected = false;
    std::string first;
    for (const auto& G : groups)
      for (const auto& c : check_null_subgroups(G, kDefaultMaxOrder)) {
        if (c.name == "null_subgroup_descriptor" && c.status != CheckStatus::Pass) {
          descriptor_ok = false;
          if (first.empty()) first = c.subject + ": " + c.detail;
        }
        if (c.name == "null_subgroup_literal") {
          ++literal_groups;
          if (c.status == CheckStatus::Known) ++literal_fail;
          if (c.status == CheckStatus::Fail) unexpected = true;
        }
      }
    const GroupDesc nine = GroupDesc::make(3, 2, 0);
    const auto kernel = torsion_meeting_kernel(nine);
    const bool counterexample = kernel == std::vector<std::uint64_t>{1, 8};
    lines[3].require(literal_fail == 0, "{g : chi(g) = chi(1)} differs from null_subgroup(chi) in " +
                                            std::to_string(literal_fail) + " of " + std::to_string(literal_groups) +
                                            " groups (linear characters whose kernel meets the torsion of G(p^r); "
                                            "twist (0,1) on G(9) has kernel {1, 8}); documented as unattainable");
    print(3, "null subgroups (literal)", lines[3], std::to_string(literal_groups) + " groups");
    Line corrected;
    corrected.require(descriptor_ok, first);
    corrected.require(!unexpected, "literal check failed in an undocumented way");
    corrected.require(counterexample, "twist (0,1) on G(9) no longer has kernel {1, 8}");
    std::cout << "AC3 " << (corrected.pass ? "PASS" : "FAIL")
              << "  null subgroups (largest subgroup C(p^x) x| G^y in the kernel, equal to the kernel on C(p^s) x| G^1 "
                 "and for induced characters): "
              << (corrected.pass ? std::to_string(groups.size()) + " groups" : corrected.detail) << "\n";
    ac3_as_documented = !lines[3].pass && corrected.pass;
  }
  // 4, 5, 6, 7
  for (const auto& G : groups)
    for (LocalCase kase : cases_for(G)) {
      for (const auto& c : check_conductors(kase, G)) absorb(tally[c.criterion], {c});
      absorb(tally[6], check_cyclotomic(kase, G));
      absorb(tally[7], check_functoriality(kase, G));
    }
  lines[4].require(tally[4].first_failure.empty(), tally[4].first_failure);
  print(4, "conductors", lines[4], std::to_string(tally[4].checks) + " cases, definitional = closed, f integral");

  struct Anchor {
    LocalCase kase;
    std::uint64_t p;
    unsigned r, s;
    long want;
  };
  for (const Anchor& a : {Anchor{LocalCase::Unit, 3, 1, 1, 7}, Anchor{LocalCase::Unit, 3, 2, 2, 121},
                          Anchor{LocalCase::Unit, 3, 2, 1, 31}, Anchor{LocalCase::Eisenstein, 3, 1, 1, 11},
                          Anchor{LocalCase::Eisenstein, 3, 2, 2, 165}}) {
    const GroupDesc G = GroupDesc::make(a.p, a.r, a.s);
    const LocalDiscriminant d = local_discriminant(a.kase, G);
    lines[5].require(d.sum == a.want && d.closed && *d.closed == a.want && d.different == a.want,
                     to_string(a.kase) + " " + G.to_string() + ": sum " + d.sum.get_str() + ", different " +
                         d.different.get_str() + ", expected " + std::to_string(a.want));
  }
  lines[5].require(tally[5].first_failure.empty(), tally[5].first_failure);
  print(5, "discriminant triple agreement", lines[5],
        std::to_string(tally[5].checks) + " checks; anchors 7, 121, 31, 11, 165");

  lines[6].require(disc_vp_local_closed(LocalCase::Unit, GroupDesc::make(3, 2, 0)) == 9, "Q(zeta_9) exponent is not 9");
  lines[6].require(tally[6].first_failure.empty(), tally[6].first_failure);
  print(6, "cyclotomic oracle", lines[6], std::to_string(tally[6].checks) + " checks; v_3(disc Q(zeta_9)) = 9");

  lines[7].require(tally[7].first_failure.empty(), tally[7].first_failure);
  print(7, "functoriality", lines[7], std::to_string(tally[7].checks) + " checks");

  // 8
  {
    const CliRun a = cli_run({"analyze", "3", "15", "--prime", "3", "--json"});
    lines[8].require(a.code == 0, "analyze 3 15 exited " + std::to_string(a.code));
    if (a.code == 0) lines[8].require(Json::parse(a.out)["e_global"] == 30, "analyze 3 15: e(3) != 30");
    const CliRun b = cli_run({"analyze", "2", "9", "--prime", "3", "--json"});
    lines[8].require(b.code == 0, "analyze 2 9 exited " + std::to_string(b.code));
    if (b.code == 0) {
      const Json j = Json::parse(b.out);
      lines[8].require(j["local"]["g"] == 1 && j["local"]["s"] == 2 && j["e_global"] == 54,
                       "analyze 2 9: " + j["local"].dump());
    }
    for (const auto& G : groups) absorb(tally[8], check_global_unit(G));
    lines[8].require(tally[8].first_failure.empty(), tally[8].first_failure);
    print(8, "global", lines[8], "e(3) = 30 for (3, 15); g = 1, s = 2, e = 54 for (2, 9); " +
                                     std::to_string(tally[8].checks) + " unit cases with m = p^r");
  }
  // 9
  {
    struct Bad {
      std::vector<std::string> args;
      std::string code, text;
    };
    for (const Bad& b : {Bad{{"analyze", "5", "9", "--json"}, "", ""}, Bad{{"analyze", "5", "6", "--json"}, "m_even", "m = 6 is even"},
                         Bad{{"analyze", "8", "3", "--json"}, "perfect_power", "a is a perfect cube: 8 = (2)^3"},
                         Bad{{"analyze", "54", "9", "--json"}, "valuation_hypothesis",
                             "v_3(a) = 3 is divisible by 3 but not by 3^2 = 9"}}) {
      const CliRun r = cli_run(b.args);
      if (b.code.empty()) {
        lines[9].require(r.code == 0, "admissible input rejected");
        continue;
      }
      lines[9].require(r.code == 2, b.args[1] + " " + b.args[2] + " exited " + std::to_string(r.code));
      if (r.code != 2) continue;
      const Json v = Json::parse(r.out)["violations"];
      lines[9].require(v.size() == 1 && v[0]["code"] == b.code &&
                           v[0]["message"].get<std::string>().find(b.text) != std::string::npos,
                       "diagnostic for " + b.args[1] + " " + b.args[2] + ": " + v.dump());
    }
    print(9, "validation", lines[9], "even m, perfect power, valuation hypothesis rejected with exit 2");
  }

  bool ok = ac3_as_documented || lines[3].pass;
  for (unsigned n : {1u, 2u, 4u, 5u, 6u, 7u, 8u, 9u}) ok = ok && lines[n].pass;
  return ok ? 0 : 1;
}
