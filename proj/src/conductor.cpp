#include "radram/conductor.hpp"

#include <stdexcept>

#include "radram/errors.hpp"

namespace radram {

namespace {

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

BigInt as_integer(const Rational& q, const std::string& what) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() != 1) throw internal_error(what + " = " + to_fraction_string(c) + " is not an integer");
  return c.get_num();
}

void require_wild(LocalCase kase) {
  if (kase != LocalCase::Unit && kase != LocalCase::Eisenstein)
    throw std::invalid_argument("conductors are computed for the unit and Eisenstein cases only");
}

BigInt degree_at(unsigned k, std::uint64_t p) { return k == 0 ? BigInt(1) : ipow(p, k - 1) * (big(p) - 1); }

// Sum of deg(k)^2 * weight(k, t) * count_by(k, t) over the groups selected by keep.
template <class Keep, class Weight>
BigInt grouped(const GroupDesc& G, Keep keep, Weight weight) {
  Rational acc = 0;
  for (unsigned k = 0; k <= G.s; ++k)
    for (unsigned t = k; t <= G.r; ++t) {
      if (!keep(k, t)) continue;
      const BigInt n = big(count_by(k, t, G));
      if (n == 0) continue;
      const BigInt d = degree_at(k, G.p);
      acc += Rational(n * d * d) * weight(k, t);
    }
  return as_integer(acc, "grouped sum");
}

}  // namespace

Rational c_exp_definitional(const Character& chi, const Filtration& upper) {
  if (chi.is_trivial()) return -1;
  if (upper.numbering != Numbering::Upper) throw std::invalid_argument("c_exp_definitional: expects upper numbering");
  const SubgroupDesc gr = null_subgroup(chi, upper.G);
  for (std::size_t k = upper.steps.size(); k-- > 0;)
    if (!contained_in(upper.steps[k].group, gr, upper.G)) return upper.steps[k].brk;
  return -1;
}

Rational c_exp_closed(unsigned lev, unsigned pr, LocalCase kase, std::uint64_t p) {
  require_wild(kase);
  if (lev == 0 && pr == 0) return -1;
  const Rational tail(1, p - 1);
  if (kase == LocalCase::Unit) {
    if (lev == 0 || lev < pr) return Rational(pr) - 1;
    return Rational(pr) - 1 + tail;
  }
  if (lev == 0 || lev + 2 <= pr) return Rational(pr) - 1;
  return Rational(lev) + tail;
}

Rational c_exp_closed(const Character& chi, LocalCase kase, std::uint64_t p) {
  if (chi.is_trivial()) return -1;
  return c_exp_closed(chi.level, chi.prim_degree, kase, p);
}

ConductorRecord artin_conductor(const Character& chi, LocalCase kase, const Filtration& upper) {
  const Rational defn = c_exp_definitional(chi, upper);
  const Rational closed = c_exp_closed(chi, kase, upper.G.p);
  if (defn != closed)
    throw internal_error("conductor exponent of " + to_string(chi) + " on " + upper.G.to_string() + ": filtration gives " +
                         to_fraction_string(defn) + ", closed form gives " + to_fraction_string(closed));
  ConductorRecord rec{chi, closed, 0};
  rec.f_val = as_integer(Rational(big(chi.degree)) * (1 + closed), "Artin conductor of " + to_string(chi));
  if (rec.f_val < 0) throw internal_error("negative Artin conductor for " + to_string(chi));
  return rec;
}

ConductorRecord artin_conductor(const Character& chi, LocalCase kase, const GroupDesc& G) {
  return artin_conductor(chi, kase, upper_filtration(kase, G));
}

std::vector<ConductorRecord> conductor_table(LocalCase kase, const GroupDesc& G) {
  require_wild(kase);
  const Filtration upper = upper_filtration(kase, G);
  const std::vector<Character> chars = character_table(G);
  std::vector<ConductorRecord> out(chars.size());
  std::string failure;
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < chars.size(); ++i) {
    try {
      out[i] = artin_conductor(chars[i], kase, upper);
    } catch (const internal_error& e) {
#pragma omp critical(radram_conductor)
      if (failure.empty()) failure = e.what();
    }
  }
  if (!failure.empty()) throw internal_error(failure);
  return out;
}

BigInt disc_vp_local_sum(LocalCase kase, const GroupDesc& G) {
  BigInt acc = 0;
  for (const auto& rec : conductor_table(kase, G)) acc += big(rec.character.degree) * rec.f_val;
  return acc;
}

BigInt disc_vp_local_grouped(LocalCase kase, const GroupDesc& G) {
  require_wild(kase);
  return grouped(
      G, [](unsigned, unsigned) { return true; },
      [&](unsigned k, unsigned t) -> Rational { return 1 + c_exp_closed(k, t, kase, G.p); });
}

BigInt disc_vp_local_closed(LocalCase kase, const GroupDesc& G) {
  require_wild(kase);
  const BigInt p = big(G.p);
  const unsigned r = G.r, s = G.s;
  const BigInt lin = r * ipow(p, r) - (r + 1) * ipow(p, r - 1);
  if (kase == LocalCase::Unit) {
    const Rational v = Rational(ipow(p, s) * lin) + Rational(2 * (ipow(p, 2 * s) - 1), p + 1);
    return as_integer(v, "closed local discriminant of " + G.to_string());
  }
  if (s != r) throw std::invalid_argument("Eisenstein closed discriminant needs s = r");
  // p^{2r-3} is 1/p at r = 1.
  const Rational p2r3 = r >= 2 ? Rational(ipow(p, 2 * r - 3)) : Rational(1, p);
  const Rational v = Rational(r * ipow(p, 2 * r - 1) * (p - 1)) + Rational(p * (ipow(p, 2 * r) - 1), p + 1) -
                     Rational(p) * (p2r3 + 1) / Rational(p + 1);
  return as_integer(v, "closed local discriminant of " + G.to_string());
}

BigInt different_sum(const Filtration& lower) {
  if (lower.numbering != Numbering::Lower) throw std::invalid_argument("different_sum: expects lower numbering");
  BigInt acc = 0;
  Rational prev = -1;
  for (const auto& st : lower.steps) {
    const BigInt len = as_integer(st.brk, "lower break") - as_integer(prev, "lower break");
    acc += len * (st.order - 1);
    prev = st.brk;
  }
  return acc;
}

std::vector<PartialSum> partial_sums(LocalCase kase, const GroupDesc& G) {
  require_wild(kase);
  const BigInt p = big(G.p);
  const unsigned r = G.r, s = G.s;
  const BigInt lin = r * ipow(p, r) - (r + 1) * ipow(p, r - 1);
  auto pr_weight = [](unsigned, unsigned t) -> Rational { return t; };
  auto exact = [&](const BigInt& num) { return as_integer(Rational(num, p + 1), "partial sum"); };
  std::vector<PartialSum> out;
  out.push_back({"linear characters", grouped(G, [](unsigned k, unsigned) { return k == 0; }, pr_weight), lin});
  out.push_back({"induced characters", grouped(G, [](unsigned k, unsigned) { return k > 0; }, pr_weight),
                 (ipow(p, s) - 1) * lin + exact(ipow(p, 2 * s) - 1)});
  const Rational tail(1, p - 1);
  if (kase == LocalCase::Unit) {
    out.push_back({"lev = pr > 0, extra 1/(p-1)",
                   grouped(G, [](unsigned k, unsigned t) { return k > 0 && k == t; },
                           [&](unsigned, unsigned) -> Rational { return tail; }),
                   exact(ipow(p, 2 * s) - 1)});
    return out;
  }
  if (s != r) throw std::invalid_argument("Eisenstein partial sums need s = r");
  out.push_back({"lev = pr - 1 > 0, extra 1/(p-1)",
                 grouped(G, [](unsigned k, unsigned t) { return k > 0 && t == k + 1; },
                         [&](unsigned, unsigned) -> Rational { return tail; }),
                 exact((p - 1) * (ipow(p, 2 * r - 2) - 1))});
  out.push_back({"lev = pr > 0, extra 1 + 1/(p-1)",
                 grouped(G, [](unsigned k, unsigned t) { return k > 0 && k == t; },
                         [&](unsigned, unsigned) -> Rational { return 1 + tail; }),
                 exact(p * (ipow(p, 2 * r) - 1))});
  return out;
}

LocalDiscriminant local_discriminant(LocalCase kase, const GroupDesc& G) {
  require_wild(kase);
  LocalDiscriminant d;
  if (class_count(G) <= kTableSumLimit) {
    d.sum = disc_vp_local_sum(kase, G);
    d.sum_method = "table";
  } else {
    d.sum = disc_vp_local_grouped(kase, G);
    d.sum_method = "grouped";
  }
  if (kase == LocalCase::Unit || G.s == G.r) d.closed = disc_vp_local_closed(kase, G);
  d.different = different_sum(lower_filtration(kase, G));
  return d;
}

BigInt disc_vp_global_unit_closed(std::uint64_t p, unsigned r, unsigned s) {
  const BigInt bp = big(p);
  const BigInt lin = r * ipow(bp, r) - (r + 1) * ipow(bp, r - 1);
  const Rational v = Rational(ipow(bp, r) * lin) + Rational(2 * (ipow(bp, r + s) - ipow(bp, r - s)), bp + 1);
  return as_integer(v, "closed global discriminant");
}

BigInt disc_vp_global(const BigInt& m, const BigInt& a, std::uint64_t p) {
  const PrimeLocalContext ctx = classify_prime(p, m, a);
  if (ctx.r == 0 || ipow(p, ctx.r) != m)
    throw std::invalid_argument("disc_vp_global: m = " + m.get_str() + " is not a power of " + std::to_string(p));
  if (!ctx.wild()) throw std::invalid_argument("disc_vp_global: prime " + std::to_string(p) + " is not wild");
  const GroupDesc G = ctx.group();
  const LocalDiscriminant local = local_discriminant(ctx.kase, G);
  if (!local.agree()) throw internal_error("local discriminant routes disagree on " + G.to_string());
  if (ctx.kase == LocalCase::Eisenstein) return local.sum;
  const BigInt via_local = ipow(p, ctx.r - ctx.s) * local.sum;
  const BigInt closed = disc_vp_global_unit_closed(p, ctx.r, ctx.s);
  if (via_local != closed)
    throw internal_error("global discriminant of " + G.to_string() + ": p^{r-s} * local = " + via_local.get_str() +
                         ", closed form = " + closed.get_str());
  return via_local;
}

}  // namespace radram
