#include "radram/chartab.hpp"

#include <algorithm>
#include <stdexcept>

#include "radram/errors.hpp"

namespace radram {

SubgroupDesc normalize(SubgroupDesc h, const GroupDesc& G) {
  h.y = std::min(h.y, G.r);
  h.x = std::min(h.x, G.s);
  if (h.x == 0 && h.y == G.r) return {0, G.r};
  return h;
}

std::uint64_t subgroup_order(SubgroupDesc h, const GroupDesc& G) {
  h = normalize(h, G);
  const std::uint64_t sigma = h.y == 0 ? G.units() : upow(G.p, G.r - h.y);
  return upow(G.p, h.x) * sigma;
}

bool is_trivial(SubgroupDesc h, const GroupDesc& G) { return subgroup_order(h, G) == 1; }

bool contained_in(SubgroupDesc a, SubgroupDesc b, const GroupDesc& G) {
  a = normalize(a, G);
  b = normalize(b, G);
  return a.x <= b.x && a.y >= b.y;
}

SubgroupDesc intersect(SubgroupDesc a, SubgroupDesc b, const GroupDesc& G) {
  a = normalize(a, G);
  b = normalize(b, G);
  return normalize({std::min(a.x, b.x), std::max(a.y, b.y)}, G);
}

SubgroupDesc product(SubgroupDesc a, SubgroupDesc b, const GroupDesc& G) {
  a = normalize(a, G);
  b = normalize(b, G);
  return normalize({std::max(a.x, b.x), std::min(a.y, b.y)}, G);
}

bool is_normal(SubgroupDesc h, const GroupDesc& G) {
  h = normalize(h, G);
  return h.y >= G.r || h.y + h.x >= G.s;
}

bool member(const HolomorphElement& g, SubgroupDesc h, const GroupDesc& G) {
  h = normalize(h, G);
  return vp_clamped(g.i, G.p, G.s) >= G.s - h.x && vp_clamped(g.u - 1, G.p, G.r) >= h.y;
}

std::string to_string(SubgroupDesc h) {
  return "C(p^" + std::to_string(h.x) + ")xG^" + std::to_string(h.y);
}

namespace {

// Exponent of psi_(a,b)(u) in Z[mu_N], N = p^r(p-1), given dlog(u) = (x, y).
std::uint64_t linear_exponent(const UnitLog& twist, const UnitLog& l, const GroupDesc& G) {
  const std::uint64_t p = G.p;
  const std::uint64_t pr = G.pr(), pr1 = pr / p;
  const std::uint64_t tors = mulmod(twist.a, l.a, p - 1);
  const std::uint64_t prin = mulmod(twist.b, l.b, pr1);
  return (tors * pr + prin * p * (p - 1)) % G.value_ring();
}

// The factor chi_k(alpha, beta) of an induced level-k value.
std::int64_t induced_factor(unsigned k, unsigned alpha, unsigned beta, const GroupDesc& G) {
  if (alpha < k || beta + 1 < k) return 0;
  const auto pk1 = static_cast<std::int64_t>(upow(G.p, k - 1));
  if (beta == k - 1) return -pk1;
  return pk1 * static_cast<std::int64_t>(G.p - 1);
}

bool trivial_on(const Character& chi, std::uint64_t u, const GroupDesc& G, const UnitGroupDecomp& d) {
  return linear_exponent(chi.twist, discrete_log(u, d), G) == 0;
}

}  // namespace

unsigned level(const Character& chi) { return chi.kind == CharKind::Linear ? 0 : chi.k; }

unsigned prim_degree(const Character& chi, const GroupDesc& G) {
  const UnitGroupDecomp d = unit_decomp(G.p, G.r);
  for (unsigned t = level(chi); t <= G.r; ++t) {
    bool trivial;
    if (t == 0) trivial = trivial_on(chi, d.torsion_gen, G, d) && trivial_on(chi, d.principal_gen, G, d);
    else trivial = trivial_on(chi, (1 + upow(G.p, t)) % G.pr(), G, d);
    if (trivial) return t;
  }
  throw internal_error("prim_degree: linear factor nontrivial on G(p^r)^r");
}

SubgroupDesc null_subgroup(const Character& chi, const GroupDesc& G) {
  return normalize({G.s - level(chi), chi.prim_degree}, G);
}

std::vector<Character> character_table(const GroupDesc& G) {
  const std::uint64_t p = G.p;
  std::vector<Character> out;
  out.reserve(class_count(G));
  const std::uint64_t pr1 = upow(p, G.r - 1);
  for (std::uint64_t a = 0; a + 1 < p; ++a)
    for (std::uint64_t b = 0; b < pr1; ++b) {
      Character chi;
      chi.twist = {a, b};
      out.push_back(chi);
    }
  for (unsigned k = 1; k <= G.s; ++k) {
    const std::uint64_t reps = upow(p, G.r - k);
    for (std::uint64_t b = 0; b < reps; ++b) {
      Character chi;
      chi.kind = CharKind::Induced;
      chi.k = k;
      chi.level = k;
      chi.twist = {0, b};
      chi.degree = upow(p, k - 1) * (p - 1);
      out.push_back(chi);
    }
  }
  for (auto& chi : out) chi.prim_degree = prim_degree(chi, G);
  return out;
}

CycInt rou_sum(unsigned s_prime, std::uint64_t p, unsigned r) {
  const GroupDesc G = GroupDesc::make(p, r, 0);
  if (s_prime > r) throw std::invalid_argument("rou_sum: s' must not exceed r");
  const std::uint64_t n = G.value_ring();
  const std::uint64_t step = n / upow(p, s_prime);
  CycInt acc(n);
  for (std::uint64_t tau : unit_residues(G)) acc.add_term(1, mulmod(tau, step, n));
  return acc.reduced();
}

Monomial char_value_monomial(const Character& chi, const ConjClass& c, const GroupDesc& G,
                             const UnitGroupDecomp& d) {
  const std::uint64_t e = linear_exponent(chi.twist, discrete_log(c.rep.u, d), G);
  if (chi.kind == CharKind::Linear) return {1, e};
  const std::int64_t f = induced_factor(chi.k, c.alpha, c.beta, G);
  if (f == 0) return {0, 0};
  return {f, e};
}

CycInt char_value(const Character& chi, const ConjClass& c, const GroupDesc& G) {
  if (!is_valid(c.rep, G) || chi.k > G.s) throw std::invalid_argument("char_value: class or character not from " + G.to_string());
  const Monomial m = char_value_monomial(chi, c, G, unit_decomp(G.p, G.r));
  return CycInt::monomial(G.value_ring(), m.c, m.e);
}

std::uint64_t count_by(unsigned k, unsigned t, const GroupDesc& G) {
  const std::uint64_t p = G.p;
  if (k > G.s || t > G.r) return 0;
  if (k == 0) {
    if (t == 0) return 1;
    if (t == 1) return p - 2;
    return upow(p, t - 2) * (p - 1) * (p - 1);
  }
  if (t < k) return 0;
  if (t == k) return 1;
  return (p - 1) * upow(p, t - k - 1);
}

CharacterTable CharacterTable::build(const GroupDesc& G) {
  CharacterTable t;
  t.G = G;
  t.decomp = unit_decomp(G.p, G.r);
  t.classes = all_classes(G);
  t.chars = character_table(G);
  std::vector<UnitLog> logs;
  logs.reserve(t.classes.size());
  for (const auto& c : t.classes) logs.push_back(discrete_log(c.rep.u, t.decomp));
  t.values.resize(t.chars.size() * t.classes.size());
  for (std::size_t i = 0; i < t.chars.size(); ++i) {
    const Character& chi = t.chars[i];
    for (std::size_t j = 0; j < t.classes.size(); ++j) {
      const ConjClass& c = t.classes[j];
      const std::uint64_t e = linear_exponent(chi.twist, logs[j], G);
      Monomial m{1, e};
      if (chi.kind == CharKind::Induced) {
        const std::int64_t f = induced_factor(chi.k, c.alpha, c.beta, G);
        m = f == 0 ? Monomial{0, 0} : Monomial{f, e};
      }
      t.values[i * t.classes.size() + j] = m;
    }
  }
  return t;
}

std::string to_string(const Character& chi) {
  std::string s = chi.kind == CharKind::Linear ? "linear" : "induced k=" + std::to_string(chi.k);
  return s + " twist=(" + std::to_string(chi.twist.a) + "," + std::to_string(chi.twist.b) + ")";
}

}  // namespace radram
