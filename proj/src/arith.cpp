#include "radram/arith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "radram/errors.hpp"

namespace radram {

unsigned PAdicVal::value() const {
  if (infinite_) throw std::logic_error("PAdicVal: value() of INF");
  return value_;
}

PAdicVal operator+(PAdicVal a, PAdicVal b) {
  if (a.infinite_ || b.infinite_) return PAdicVal::infinity();
  return PAdicVal(a.value_ + b.value_);
}

std::string PAdicVal::to_string() const {
  return infinite_ ? std::string("INF") : std::to_string(value_);
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

bool is_prime(std::uint64_t n) {
  return is_prime(BigInt(static_cast<unsigned long>(n)));
}

PAdicVal vp(const BigInt& n, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("vp: " + std::to_string(p) + " is not prime");
  if (n == 0) return PAdicVal::infinity();
  BigInt q = abs(n);
  const BigInt bp(static_cast<unsigned long>(p));
  unsigned k = 0;
  while (mpz_divisible_p(q.get_mpz_t(), bp.get_mpz_t())) {
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), bp.get_mpz_t());
    ++k;
  }
  return PAdicVal(k);
}

namespace {

// Pollard-Brent; n odd composite.
BigInt find_factor(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 64;
    unsigned long r = 1;
    auto f = [&](const BigInt& v) {
      BigInt w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = q * abs(x - y);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        BigInt d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = find_factor(n);
  factor_into(d, out);
  factor_into(BigInt(n / d), out);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
  if (n == 0) throw std::invalid_argument("factorize: zero");
  BigInt q = abs(n);
  std::map<BigInt, unsigned> found;
  for (unsigned long p = 2; p < 10000 && BigInt(p) * p <= q; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(q.get_mpz_t(), p)) {
      mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), p);
      ++found[BigInt(p)];
    }
  }
  factor_into(q, found);
  return {found.begin(), found.end()};
}

std::vector<std::uint64_t> prime_divisors(const BigInt& n) {
  std::vector<std::uint64_t> out;
  for (const auto& [q, e] : factorize(n)) {
    if (!q.fits_ulong_p()) throw unsupported_error("prime factor exceeds 64 bits");
    out.push_back(q.get_ui());
  }
  return out;
}

BigInt ipow(const BigInt& base, unsigned e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

BigInt ipow(std::uint64_t base, unsigned e) {
  return ipow(BigInt(static_cast<unsigned long>(base)), e);
}

std::uint64_t upow(std::uint64_t base, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (base != 0 && out > (std::uint64_t{1} << 62) / base)
      throw unsupported_error("modulus " + std::to_string(base) + "^" + std::to_string(e) +
                              " exceeds 2^62");
    out *= base;
  }
  return out;
}

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  BigInt out;
  BigInt ba(static_cast<unsigned long>(a % m)), bm(static_cast<unsigned long>(m));
  if (mpz_invert(out.get_mpz_t(), ba.get_mpz_t(), bm.get_mpz_t()) == 0)
    throw std::invalid_argument("invmod: " + std::to_string(a) + " is not invertible mod " +
                                std::to_string(m));
  return out.get_ui();
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  const auto qs = prime_divisors(BigInt(static_cast<unsigned long>(p - 1)));
  for (std::uint64_t g = 2; g < p; ++g) {
    bool primitive = std::all_of(qs.begin(), qs.end(),
                                 [&](std::uint64_t q) { return powmod(g, (p - 1) / q, p) != 1; });
    if (primitive) return g;
  }
  throw internal_error("no primitive root modulo " + std::to_string(p));
}

UnitGroupDecomp unit_decomp(std::uint64_t p, unsigned r) {
  if (!is_prime(p)) throw std::invalid_argument("unit_decomp: p = " + std::to_string(p) + " is not prime");
  if (p == 2) throw unsupported_error("unit_decomp: p = 2 is not supported");
  if (r == 0) throw std::invalid_argument("unit_decomp: r must be >= 1");
  UnitGroupDecomp d;
  d.p = p;
  d.r = r;
  d.modulus = upow(p, r);
  const std::uint64_t g = smallest_primitive_root(p);
  d.torsion_gen = powmod(g, upow(p, r - 1), d.modulus);
  d.principal_gen = (1 + p) % d.modulus;
  d.torsion_order = p - 1;
  d.principal_order = upow(p, r - 1);
  return d;
}

UnitLog discrete_log(std::uint64_t u, const UnitGroupDecomp& d) {
  u %= d.modulus;
  if (u % d.p == 0)
    throw std::invalid_argument("discrete_log: " + std::to_string(u) + " is not a unit mod " +
                                std::to_string(d.modulus));
  UnitLog out;
  // torsion_gen is congruent to the primitive root g mod p.
  const std::uint64_t target = u % d.p;
  const std::uint64_t g = d.torsion_gen % d.p;
  std::uint64_t acc = 1;
  while (acc != target) {
    acc = mulmod(acc, g, d.p);
    ++out.a;
  }
  const std::uint64_t t_inv = invmod(powmod(d.torsion_gen, out.a, d.modulus), d.modulus);
  const std::uint64_t w = mulmod(u, t_inv, d.modulus);  // w = 1 mod p

  // Lift b one p-adic digit at a time: (1+p)^b = w mod p^{k+1}.
  std::uint64_t step = 1;  // p^{k-1}
  std::uint64_t mod_k = d.p;
  for (unsigned k = 1; k < d.r; ++k) {
    mod_k *= d.p;
    bool found = false;
    for (std::uint64_t digit = 0; digit < d.p; ++digit) {
      const std::uint64_t cand = out.b + digit * step;
      if (powmod(d.principal_gen, cand, mod_k) == w % mod_k) {
        out.b = cand;
        found = true;
        break;
      }
    }
    if (!found) throw internal_error("discrete_log: lifting failed");
    step *= d.p;
  }
  return out;
}

std::uint64_t unit_from_log(const UnitLog& l, const UnitGroupDecomp& d) {
  return mulmod(powmod(d.torsion_gen, l.a, d.modulus), powmod(d.principal_gen, l.b, d.modulus),
                d.modulus);
}

unsigned compute_s(const BigInt& a, std::uint64_t p, unsigned r) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("compute_s: p must be an odd prime");
  if (r == 0) throw std::invalid_argument("compute_s: r must be >= 1");
  const BigInt bp(static_cast<unsigned long>(p));
  if (a == 0 || mpz_divisible_p(a.get_mpz_t(), bp.get_mpz_t()))
    throw std::invalid_argument("compute_s: p divides a");
  // v_p(a^{p-1} - 1) is visible modulo p^{r+1}.
  const BigInt mod = ipow(bp, r + 1);
  BigInt pw;
  BigInt am = a % mod;
  if (am < 0) am += mod;
  const BigInt e(static_cast<unsigned long>(p - 1));
  mpz_powm(pw.get_mpz_t(), am.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  BigInt diff = pw - 1;
  if (diff < 0) diff += mod;
  const PAdicVal v = vp(diff, p);
  if (v.is_infinite() || v.value() >= r + 1) return 0;
  return r + 1 - v.value();
}

std::string to_fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a fraction: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace radram
