#include "radram/ramfil.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "radram/errors.hpp"

namespace radram {

std::string to_string(LocalCase c) {
  switch (c) {
    case LocalCase::Unramified: return "unramified";
    case LocalCase::Tame: return "tame";
    case LocalCase::Unit: return "unit";
    case LocalCase::Eisenstein: return "eisenstein";
  }
  return "?";
}

GroupDesc PrimeLocalContext::group() const {
  if (!wild()) throw std::invalid_argument("no holomorph group attached to a " + radram::to_string(kase) + " prime");
  return GroupDesc::make(p, r, s);
}

namespace {

std::string power_name(std::uint64_t q) {
  if (q == 2) return "square";
  if (q == 3) return "cube";
  return std::to_string(q) + "-th power";
}

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

}  // namespace

std::vector<Violation> validate(const BigInt& m, const BigInt& a) {
  if (m < 1) throw std::invalid_argument("m must be a positive integer");
  if (a == 0 || a == 1 || a == -1) throw std::invalid_argument("a must not be 0, 1 or -1");
  std::vector<Violation> out;
  if (mpz_even_p(m.get_mpz_t()))
    out.push_back({"m_even", "m = " + m.get_str() + " is even; only odd m are supported", 2});
  if (m == 1) return out;
  const BigInt abs_a = abs(a);
  for (const auto& [qb, mult] : factorize(m)) {
    const std::uint64_t q = qb.get_ui();
    BigInt root;
    if (mpz_root(root.get_mpz_t(), abs_a.get_mpz_t(), q) != 0 && (a > 0 || q % 2 == 1)) {
      const BigInt base = a > 0 ? root : BigInt(-root);
      out.push_back({"perfect_power",
                     "a is a perfect " + power_name(q) + ": " + a.get_str() + " = (" + base.get_str() + ")^" +
                         std::to_string(q),
                     q});
    }
    if (q == 2) continue;
    const unsigned r = vp(m, q).value();
    const unsigned v = vp(a, q).value();
    const BigInt pr = ipow(q, r);
    if (v != 0 && v % q == 0 && big(v) % pr != 0)
      out.push_back({"valuation_hypothesis",
                     "v_" + std::to_string(q) + "(a) = " + std::to_string(v) + " is divisible by " +
                         std::to_string(q) + " but not by " + std::to_string(q) + "^" + std::to_string(r) + " = " +
                         pr.get_str(),
                     q});
  }
  return out;
}

PrimeLocalContext classify_prime(std::uint64_t p, const BigInt& m, const BigInt& a) {
  if (!is_prime(p)) throw std::invalid_argument("classify_prime: " + std::to_string(p) + " is not prime");
  if (m < 1 || a == 0) throw std::invalid_argument("classify_prime: need m >= 1 and a != 0");
  PrimeLocalContext ctx;
  ctx.p = p;
  ctx.r = vp(m, p).value();
  ctx.vp_a = vp(a, p).value();
  if (ctx.r == 0) {
    if (ctx.vp_a == 0) {
      ctx.kase = LocalCase::Unramified;
      ctx.e = 1;
      return ctx;
    }
    ctx.kase = LocalCase::Tame;
    ctx.e = m / gcd(m, big(ctx.vp_a));
    return ctx;
  }
  if (p == 2) throw unsupported_error("classify_prime: p = 2 dividing m is not supported");
  const BigInt pr = ipow(p, ctx.r);
  const BigInt phi = ipow(p, ctx.r - 1) * big(p - 1);
  if (big(ctx.vp_a) % pr == 0) {
    ctx.kase = LocalCase::Unit;
    const BigInt normalized = a / ipow(p, ctx.vp_a);
    ctx.s = compute_s(normalized, p, ctx.r);
    ctx.g = ipow(p, ctx.r - ctx.s);
    ctx.e = ipow(p, ctx.s) * phi;
    ctx.f_res = BigInt(1);
  } else if (ctx.vp_a % p != 0) {
    ctx.kase = LocalCase::Eisenstein;
    ctx.s = ctx.r;
    ctx.g = BigInt(1);
    ctx.e = pr * phi;
    ctx.f_res = BigInt(1);
  } else {
    throw std::invalid_argument("classify_prime: at p = " + std::to_string(p) + ", v_p(a) = " +
                                std::to_string(ctx.vp_a) + " is divisible by p but not by p^" +
                                std::to_string(ctx.r));
  }
  return ctx;
}

std::size_t Filtration::step_at(const Rational& v) const {
  if (v < 0) throw std::invalid_argument("filtration index must be non-negative");
  for (std::size_t k = 0; k < steps.size(); ++k)
    if (v <= steps[k].brk) return k;
  return steps.size();
}

BigInt Filtration::order_at(const Rational& v) const {
  const std::size_t k = step_at(v);
  return k < steps.size() ? steps[k].order : BigInt(1);
}

SubgroupDesc Filtration::group_at(const Rational& v) const {
  if (cyclic_only) throw std::logic_error("group_at: tame filtrations carry no descriptors");
  const std::size_t k = step_at(v);
  return k < steps.size() ? normalize(steps[k].group, G) : SubgroupDesc{0, G.r};
}

BigInt Filtration::top_order() const { return steps.empty() ? BigInt(1) : steps.front().order; }

namespace {

std::string numbering_name(Numbering n) { return n == Numbering::Upper ? "upper" : "lower"; }

[[noreturn]] void inconsistent(const GroupDesc& G, const std::string& what) {
  throw internal_error("inconsistent filtration for " + G.to_string() + ": " + what);
}

}  // namespace

Filtration canonicalize(const GroupDesc& G, Numbering numbering, const std::vector<FamilyEntry>& entries) {
  Filtration f;
  f.G = G;
  f.numbering = numbering;
  for (const auto& ent : entries) {
    const SubgroupDesc h = normalize(ent.group, G);
    if (is_trivial(h, G)) continue;
    if (ent.brk < 0) inconsistent(G, "negative break");
    if (!f.steps.empty() && f.steps.back().group == h) {
      f.steps.back().brk = ent.brk;
      continue;
    }
    f.steps.push_back({ent.brk, h, big(subgroup_order(h, G))});
  }
  for (std::size_t k = 1; k < f.steps.size(); ++k) {
    const auto& prev = f.steps[k - 1];
    const auto& cur = f.steps[k];
    if (!(cur.brk > prev.brk))
      inconsistent(G, "breaks " + to_fraction_string(prev.brk) + " and " + to_fraction_string(cur.brk) +
                          " do not increase");
    if (!contained_in(cur.group, prev.group, G) || cur.group == prev.group)
      inconsistent(G, to_string(cur.group) + " is not a proper subgroup of " + to_string(prev.group));
  }
  return f;
}

std::vector<FamilyEntry> unit_upper_family(const GroupDesc& G) {
  const unsigned r = G.r, s = G.s;
  const Rational tail(1, static_cast<unsigned long>(G.p - 1));
  std::vector<FamilyEntry> e{{Rational(0), {s, 0}}};
  for (unsigned i = 1; i <= s; ++i) {
    e.push_back({Rational(i - 1) + tail, {s - i + 1, i}});
    e.push_back({Rational(i), {s - i, i}});
  }
  for (unsigned j = 1; j + 1 + s <= r; ++j) e.push_back({Rational(s + j), {0, s + j}});
  return e;
}

std::vector<FamilyEntry> eisenstein_upper_family(const GroupDesc& G) {
  const unsigned r = G.r, s = G.s;
  const Rational tail(1, static_cast<unsigned long>(G.p - 1));
  std::vector<FamilyEntry> e{{Rational(0), {s, 0}}, {Rational(1), {s, 1}}};
  for (unsigned i = 1; i <= s; ++i) {
    e.push_back({Rational(i) + tail, {s - i + 1, i + 1}});
    e.push_back({Rational(i + 1), {s - i, i + 1}});
  }
  for (unsigned j = 1; j + 2 + s <= r; ++j) e.push_back({Rational(s + j + 1), {0, s + j + 1}});
  return e;
}

Filtration upper_filtration(LocalCase kase, const GroupDesc& G) {
  switch (kase) {
    case LocalCase::Unit: return canonicalize(G, Numbering::Upper, unit_upper_family(G));
    case LocalCase::Eisenstein: return canonicalize(G, Numbering::Upper, eisenstein_upper_family(G));
    default: throw std::invalid_argument("upper_filtration: not a wild case");
  }
}

Filtration upper_filtration(const PrimeLocalContext& ctx) {
  if (ctx.wild()) return upper_filtration(ctx.kase, ctx.group());
  Filtration f;
  f.cyclic_only = true;
  if (ctx.kase == LocalCase::Tame) f.steps.push_back({Rational(0), {0, 0}, ctx.e});
  return f;
}

Rational herbrand_phi(const Filtration& lower, const Rational& u) {
  if (u < 0) throw std::invalid_argument("herbrand_phi: negative argument");
  if (lower.steps.empty()) return u;
  const Rational g0(lower.top_order());
  Rational acc = 0, prev = 0;
  for (const auto& st : lower.steps) {
    if (u <= prev) return acc;
    const Rational hi = std::min(u, st.brk);
    acc += (hi - prev) * Rational(st.order) / g0;
    prev = st.brk;
  }
  if (u > prev) acc += (u - prev) / g0;
  return acc;
}

Rational herbrand_psi(const Filtration& upper, const Rational& v) {
  if (v < 0) throw std::invalid_argument("herbrand_psi: negative argument");
  if (upper.steps.empty()) return v;
  const Rational g0(upper.top_order());
  Rational acc = 0, prev = 0;
  for (const auto& st : upper.steps) {
    if (v <= prev) return acc;
    const Rational hi = std::min(v, st.brk);
    acc += (hi - prev) * g0 / Rational(st.order);
    prev = st.brk;
  }
  if (v > prev) acc += (v - prev) * g0;
  return acc;
}

Filtration to_lower(const Filtration& upper) {
  if (upper.numbering != Numbering::Upper) throw std::invalid_argument("to_lower: expects upper numbering");
  Filtration f = upper;
  f.numbering = Numbering::Lower;
  for (auto& st : f.steps) st.brk = herbrand_psi(upper, st.brk);
  return f;
}

Filtration to_upper(const Filtration& lower) {
  if (lower.numbering != Numbering::Lower) throw std::invalid_argument("to_upper: expects lower numbering");
  Filtration f = lower;
  f.numbering = Numbering::Upper;
  for (auto& st : f.steps) st.brk = herbrand_phi(lower, st.brk);
  return f;
}

std::vector<IndexClaim> listed_lower_claims(LocalCase kase, const GroupDesc& G) {
  const BigInt p = big(G.p);
  const unsigned r = G.r, s = G.s;
  auto P = [&](unsigned e) { return ipow(p, e); };
  auto frac = [&](const BigInt& num) {
    Rational q(num, p + 1);
    q.canonicalize();
    return q;
  };
  std::vector<IndexClaim> out;
  if (kase == LocalCase::Unit) {
    out.push_back({"G_0", Rational(0), {s, 0}});
    for (unsigned i = 1; i <= s; ++i) {
      out.push_back({"G^{" + std::to_string(i - 1) + "+1/(p-1)}", frac(2 * P(2 * i - 1) - p + 1), {s - i + 1, i}});
      out.push_back({"G^{" + std::to_string(i) + "}", frac((p - 1) * (P(2 * i) - 1)), {s - i, i}});
    }
    for (unsigned j = 1; j + 1 + s <= r; ++j)
      out.push_back({"G^{" + std::to_string(s + j) + "}",
                     frac((p - 1) * (P(2 * s) - 1)) + Rational(P(2 * s) * (P(j) - 1)), {0, s + j}});
    return out;
  }
  if (kase == LocalCase::Eisenstein && s == r) {
    out.push_back({"G_0", Rational(0), {r, 0}});
    out.push_back({"G^1", Rational(p - 1), {r, 1}});
    for (unsigned i = 1; i + 1 < r; ++i) {
      out.push_back({"G^{" + std::to_string(i) + "+1/(p-1)}", frac(2 * P(2 * i) + p - 1), {r - i + 1, i + 1}});
      out.push_back({"G^{" + std::to_string(i + 1) + "}", frac((p - 1) * (P(2 * i + 1) + 1)), {r - i, i + 1}});
    }
    if (r >= 2) out.push_back({"C(p^2)", frac(2 * P(2 * r - 2) + p - 1), {2, r}});
    out.push_back({"C(p)", frac(P(2 * r) + P(2 * r - 2) + p - 1), {1, r}});
  }
  return out;
}

std::vector<IndexClaim> congruence_subgroup_claims(const GroupDesc& G) {
  const BigInt p = big(G.p);
  const unsigned r = G.r, s = G.s;
  std::vector<IndexClaim> out;
  for (unsigned i = 1; i <= s; ++i)
    out.push_back({"G(p^r)^" + std::to_string(i), Rational((p - 1) * (ipow(p, i) - 1)), {0, i}, Numbering::Upper});
  for (unsigned j = 1; j + 1 + s <= r; ++j)
    out.push_back({"G(p^r)^" + std::to_string(s + j), Rational((p - 1) * ((j + 1) * ipow(p, s) - 1)),
                   {0, s + j}, Numbering::Upper});
  for (unsigned i = 1; i <= s; ++i)
    out.push_back({"G(p^r)^" + std::to_string(i), Rational((p - 1) * (ipow(p, 2 * i) - 1), p + 1), {0, i}});
  for (unsigned j = 1; j + 1 + s <= r; ++j)
    out.push_back({"G(p^r)^" + std::to_string(s + j),
                   Rational((p - 1) * (ipow(p, 2 * s) - 1), p + 1) + Rational(ipow(p, 2 * s) * (ipow(p, j) - 1)),
                   {0, s + j}});
  return out;
}

std::optional<std::string> check_claims(const Filtration& f, const std::vector<IndexClaim>& claims) {
  for (auto c : claims) {
    if (c.numbering != f.numbering) continue;
    c.index.canonicalize();
    if (c.index.get_den() != 1 && c.numbering == Numbering::Lower)
      return c.label + ": lower index " + to_fraction_string(c.index) + " is not an integer";
    const SubgroupDesc want = normalize(c.group, f.G);
    const SubgroupDesc got = f.group_at(c.index);
    if (!(want == got))
      return c.label + " at " + numbering_name(c.numbering) + " index " + to_fraction_string(c.index) +
             ": expected " + to_string(want) + ", filtration has " + to_string(got);
  }
  return std::nullopt;
}

Filtration lower_filtration(LocalCase kase, const GroupDesc& G) {
  Filtration f = to_lower(upper_filtration(kase, G));
  for (const auto& st : f.steps)
    if (st.brk.get_den() != 1) inconsistent(G, "non-integral lower break " + to_fraction_string(st.brk));
  if (auto bad = check_claims(f, listed_lower_claims(kase, G))) inconsistent(G, *bad);
  return f;
}

Filtration lower_filtration(const PrimeLocalContext& ctx) {
  if (ctx.wild()) return lower_filtration(ctx.kase, ctx.group());
  Filtration f = upper_filtration(ctx);
  f.numbering = Numbering::Lower;
  return f;
}

BigInt step_break(unsigned i, LocalCase kase, std::uint64_t p) {
  if (i == 0) throw std::invalid_argument("step_break: i must be >= 1");
  if (kase == LocalCase::Unit) return 1 + big(p) * (ipow(p, i - 1) - 1);
  if (kase == LocalCase::Eisenstein) return ipow(p, i);
  throw std::invalid_argument("step_break: not a wild case");
}

Filtration subgroup_filtration(const Filtration& lower, SubgroupDesc H) {
  if (lower.numbering != Numbering::Lower) throw std::invalid_argument("subgroup_filtration: expects lower numbering");
  std::vector<FamilyEntry> entries;
  for (const auto& st : lower.steps) entries.push_back({st.brk, intersect(st.group, H, lower.G)});
  return canonicalize(lower.G, Numbering::Lower, entries);
}

namespace {

// N normal in H, both descriptors with N inside H.
bool normal_in(SubgroupDesc n, SubgroupDesc h, const GroupDesc& G) {
  n = normalize(n, G);
  h = normalize(h, G);
  return n.y >= G.r || n.y + n.x >= h.x;
}

}  // namespace

Filtration quotient_filtration(const Filtration& upper, SubgroupDesc N) {
  if (upper.numbering != Numbering::Upper) throw std::invalid_argument("quotient_filtration: expects upper numbering");
  const GroupDesc& G = upper.G;
  N = normalize(N, G);
  Filtration f;
  f.G = G;
  f.numbering = Numbering::Upper;
  if (upper.steps.empty()) return f;
  const SubgroupDesc top = upper.steps.front().group;
  if (!normal_in(N, product(top, N, G), G))
    throw std::invalid_argument("quotient_filtration: " + to_string(N) + " is not normal");
  const BigInt n_order = big(subgroup_order(N, G));
  for (const auto& st : upper.steps) {
    const SubgroupDesc img = product(st.group, N, G);
    if (img == N) break;
    if (!f.steps.empty() && f.steps.back().group == img) {
      f.steps.back().brk = st.brk;
      continue;
    }
    f.steps.push_back({st.brk, img, big(subgroup_order(img, G)) / n_order});
  }
  return f;
}

Rational step_break_from_filtration(LocalCase kase, const GroupDesc& G, unsigned i) {
  if (i == 0 || i > G.s) throw std::invalid_argument("step_break_from_filtration: need 1 <= i <= s");
  const SubgroupDesc H{G.s - i + 1, 1}, N{G.s - i, 1};
  const Filtration sub = subgroup_filtration(lower_filtration(kase, G), H);
  const Filtration quot = quotient_filtration(to_upper(sub), N);
  if (quot.steps.empty()) inconsistent(G, "tower step " + std::to_string(i) + " is unramified");
  if (quot.steps.back().order != G.p || quot.steps.size() != 1)
    inconsistent(G, "tower step " + std::to_string(i) + " quotient is not a single ramified step of order p");
  return quot.steps.back().brk;
}

GlobalRamification global_ram(const BigInt& m, const BigInt& a) {
  if (!validate(m, a).empty()) throw std::invalid_argument("global_ram: (m, a) violates the hypotheses");
  GlobalRamification out;
  out.m = m;
  out.a = a;
  std::vector<std::uint64_t> primes;
  if (m > 1) primes = prime_divisors(m);
  for (std::uint64_t q : prime_divisors(a == -1 ? BigInt(1) : abs(a))) primes.push_back(q);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (std::uint64_t p : primes) {
    GlobalPrime gp;
    gp.ctx = classify_prime(p, m, a);
    if (gp.ctx.r == 0) {
      gp.e_global = gp.ctx.e;
    } else {
      const BigInt n = m / ipow(p, gp.ctx.r);
      gp.e_global = lcm(n / gcd(n, big(gp.ctx.vp_a)), gp.ctx.e);
    }
    out.primes.push_back(std::move(gp));
  }
  return out;
}

std::string to_string(const Filtration& f) {
  std::ostringstream os;
  os << numbering_name(f.numbering) << " [";
  for (std::size_t k = 0; k < f.steps.size(); ++k) {
    if (k) os << ", ";
    os << to_fraction_string(f.steps[k].brk) << ": ";
    if (f.cyclic_only) os << "cyclic";
    else os << to_string(f.steps[k].group);
    os << " (order " << f.steps[k].order.get_str() << ")";
  }
  os << "]";
  return os.str();
}

}  // namespace radram
