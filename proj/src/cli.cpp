#include "radram/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>

#include "radram/errors.hpp"
#include "radram/oracle.hpp"
#include "radram/report.hpp"
#include "radram/verify.hpp"

namespace radram::cli {

namespace {

BigInt parse_int(const std::string& text, const char* what) {
  BigInt n;
  std::string t = text;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || n.set_str(t, 10) != 0) throw std::invalid_argument(std::string(what) + " must be an integer, got '" + text + "'");
  return n;
}

int do_analyze(const std::string& a_text, const std::string& m_text, std::optional<std::uint64_t> prime, bool json,
               std::ostream& out, std::ostream& err) {
  const BigInt a = parse_int(a_text, "a");
  const BigInt m = parse_int(m_text, "m");
  const Report rep = analyze(m, a);
  if (!rep.violations.empty()) {
    if (json) out << dump(to_json(rep));
    else out << render(rep);
    for (const auto& v : rep.violations) err << "violation [" << v.code << "]: " << v.message << "\n";
    return kExitHypothesis;
  }
  if (prime) {
    for (const auto& b : rep.primes)
      if (b.ctx.p == *prime) {
        out << (json ? dump(to_json(b)) : render(b));
        return kExitOk;
      }
    err << "error: " << *prime << " divides neither m nor a\n";
    return kExitUsage;
  }
  out << (json ? dump(to_json(rep)) : render(rep));
  return kExitOk;
}

int do_verify(std::optional<std::uint64_t> p, std::optional<unsigned> r, std::optional<unsigned> s,
              std::optional<std::uint64_t> max_order, bool json, std::ostream& out) {
  const std::uint64_t bound = max_order ? *max_order : max_order_from_env();
  if (s && !r) throw std::invalid_argument("--s needs --r");
  if (r && !p) throw std::invalid_argument("--r needs --p");
  VerificationReport rep;
  rep.max_order = bound;
  if (p && r && s) {
    rep = verify_group(GroupDesc::make(*p, *r, *s), bound);
  } else if (p && r) {
    for (unsigned t = 0; t <= *r; ++t) rep.append(verify_group(GroupDesc::make(*p, *r, t), bound));
  } else {
    std::vector<std::uint64_t> primes = p ? std::vector<std::uint64_t>{*p} : std::vector<std::uint64_t>{3, 5, 7};
    rep = verify_range(primes, 3, bound);
  }
  if (json) {
    out << dump(to_json(rep));
  } else {
    for (const auto& c : rep.checks) {
      out << to_string(c.status) << "  [" << c.criterion << "] " << c.name << " " << c.subject;
      if (!c.detail.empty() && c.status != CheckStatus::Pass) out << ": " << c.detail;
      out << "\n";
    }
    out << rep.count(CheckStatus::Pass) << " passed, " << rep.count(CheckStatus::Fail) << " failed, "
        << rep.count(CheckStatus::Skip) << " skipped, " << rep.count(CheckStatus::Known) << " known discrepancies, "
        << rep.count(CheckStatus::Note) << " notes\n";
  }
  return rep.passed() ? kExitOk : kExitInternal;
}

int do_chartab(std::uint64_t p, unsigned r, unsigned s, bool json, std::ostream& out) {
  const GroupDesc G = GroupDesc::make(p, r, s);
  const std::uint64_t bound = max_order_from_env();
  if (G.order() > bound)
    throw resource_limit_error("|G| = " + std::to_string(G.order()) + " exceeds the order bound " +
                               std::to_string(bound) + " (RADICAL_RAM_MAX_ORDER)");
  const CharacterTable t = CharacterTable::build(G);
  out << (json ? dump(to_json(t)) : render(t));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramification data of Q(zeta_m, a^(1/m))", "radram"};
  app.require_subcommand(1);

  std::string a_text, m_text;
  std::optional<std::uint64_t> prime;
  bool json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "ramification, conductors and discriminants of Q(zeta_m, a^(1/m))");
  analyze_cmd->add_option("a", a_text, "radicand")->required();
  analyze_cmd->add_option("m", m_text, "odd root degree")->required();
  analyze_cmd->add_option("--prime", prime, "print only the block of this prime");
  analyze_cmd->add_flag("--json", json, "emit JSON");

  std::optional<std::uint64_t> vp, max_order;
  std::optional<unsigned> vr, vs;
  bool vjson = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the brute-force oracle suites");
  verify_cmd->add_option("--p", vp, "odd prime");
  verify_cmd->add_option("--r", vr, "exponent of p in the root degree");
  verify_cmd->add_option("--s", vs, "order exponent of the cyclic part, 0 <= s <= r");
  verify_cmd->add_option("--max-order", max_order, "largest group enumerated (default RADICAL_RAM_MAX_ORDER or 100000)");
  verify_cmd->add_flag("--json", vjson, "emit JSON");

  std::uint64_t cp = 0;
  unsigned cr = 0, cs = 0;
  bool cjson = false;
  auto* chartab_cmd = app.add_subcommand("chartab", "character table of C(p^s) x| G(p^r)");
  chartab_cmd->add_option("p", cp, "odd prime")->required();
  chartab_cmd->add_option("r", cr, "r >= 1")->required();
  chartab_cmd->add_option("s", cs, "0 <= s <= r")->required();
  chartab_cmd->add_flag("--json", cjson, "emit JSON");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return do_analyze(a_text, m_text, prime, json, out, err);
    if (verify_cmd->parsed()) return do_verify(vp, vr, vs, max_order, vjson, out);
    if (chartab_cmd->parsed()) return do_chartab(cp, cr, cs, cjson, out);
  } catch (const internal_error& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const unsupported_error& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitUsage;
  } catch (const resource_limit_error& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace radram::cli
