#include "radram/holomorph.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "radram/arith.hpp"
#include "radram/errors.hpp"

namespace radram {

GroupDesc GroupDesc::make(std::uint64_t p, unsigned r, unsigned s) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (p == 2) throw unsupported_error("p = 2 is not supported");
  if (r == 0) throw std::invalid_argument("r must be >= 1");
  if (s > r) throw std::invalid_argument("s must satisfy 0 <= s <= r");
  GroupDesc G;
  G.p = p;
  G.r = r;
  G.s = s;
  (void)G.value_ring();  // rejects moduli past 62 bits up front
  return G;
}

std::uint64_t GroupDesc::pr() const { return upow(p, r); }
std::uint64_t GroupDesc::ps() const { return upow(p, s); }
std::uint64_t GroupDesc::units() const { return upow(p, r - 1) * (p - 1); }
std::uint64_t GroupDesc::order() const {
  const std::uint64_t a = ps(), b = units();
  if (b != 0 && a > (std::uint64_t{1} << 62) / b) throw unsupported_error("group order exceeds 2^62");
  return a * b;
}
std::uint64_t GroupDesc::value_ring() const {
  const std::uint64_t q = pr();
  if (q > (std::uint64_t{1} << 62) / (p - 1)) throw unsupported_error("p^r(p-1) exceeds 2^62");
  return q * (p - 1);
}

std::string GroupDesc::to_string() const {
  return "(p=" + std::to_string(p) + ", r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")";
}

unsigned vp_clamped(std::uint64_t n, std::uint64_t p, unsigned cap) {
  unsigned k = 0;
  if (n == 0) return cap;
  while (k < cap && n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

bool is_valid(const HolomorphElement& g, const GroupDesc& G) {
  return g.i < G.ps() && g.u < G.pr() && g.u % G.p != 0;
}

HolomorphElement identity() { return {0, 1}; }

namespace {

void require_valid(const HolomorphElement& g, const GroupDesc& G) {
  if (!is_valid(g, G))
    throw std::invalid_argument("element (" + std::to_string(g.i) + ", " + std::to_string(g.u) +
                                ") does not lie in " + G.to_string());
}

}  // namespace

HolomorphElement mul(const HolomorphElement& g, const HolomorphElement& h, const GroupDesc& G) {
  require_valid(g, G);
  require_valid(h, G);
  const std::uint64_t ps = G.ps(), pr = G.pr();
  return {(g.i + mulmod(g.u % ps, h.i, ps)) % ps, mulmod(g.u, h.u, pr)};
}

HolomorphElement inv(const HolomorphElement& g, const GroupDesc& G) {
  require_valid(g, G);
  const std::uint64_t ps = G.ps(), pr = G.pr();
  const std::uint64_t w = invmod(g.u, pr);
  // (i, u)^{-1} = (-u^{-1} i, u^{-1})
  const std::uint64_t j = mulmod(w % ps, g.i, ps);
  return {(ps - j) % ps, w};
}

ConjClass conj_class_of(const HolomorphElement& g, const GroupDesc& G) {
  require_valid(g, G);
  ConjClass c;
  c.alpha = vp_clamped(g.u - 1, G.p, G.r);
  const unsigned cap = std::min(c.alpha, G.s);
  c.beta = vp_clamped(g.i, G.p, cap);
  c.rep = {upow(G.p, c.beta) % G.ps(), g.u};
  c.size = c.beta < cap ? upow(G.p, G.s - c.beta) - upow(G.p, G.s - c.beta - 1) : upow(G.p, G.s - cap);
  return c;
}

std::vector<std::uint64_t> unit_residues(const GroupDesc& G) {
  std::vector<std::uint64_t> out;
  out.reserve(G.units());
  for (std::uint64_t u = 1; u < G.pr(); ++u)
    if (u % G.p != 0) out.push_back(u);
  return out;
}

std::vector<ConjClass> all_classes(const GroupDesc& G) {
  std::vector<ConjClass> out;
  for (std::uint64_t u : unit_residues(G)) {
    const unsigned alpha = vp_clamped(u - 1, G.p, G.r);
    const unsigned cap = std::min(alpha, G.s);
    for (unsigned beta = 0; beta <= cap; ++beta) out.push_back(conj_class_of({upow(G.p, beta) % G.ps(), u}, G));
  }
  std::sort(out.begin(), out.end(), [](const ConjClass& a, const ConjClass& b) {
    return std::tie(a.alpha, a.beta, a.rep.u) < std::tie(b.alpha, b.beta, b.rep.u);
  });
  return out;
}

std::uint64_t class_count(const GroupDesc& G) {
  const std::uint64_t p = G.p;
  return upow(p, G.r - 1) * (p - 1) + upow(p, G.r - G.s) * ((upow(p, G.s) - 1) / (p - 1));
}

}  // namespace radram
