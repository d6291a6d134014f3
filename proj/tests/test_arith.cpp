#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "radram/arith.hpp"
#include "radram/errors.hpp"

using namespace radram;

TEST_CASE("vp basics") {
  CHECK(vp(BigInt(45), 3) == PAdicVal(2));
  CHECK(vp(BigInt(7), 7) == PAdicVal(1));
  CHECK(vp(BigInt(0), 5).is_infinite());
  CHECK(vp(BigInt(-81), 3) == PAdicVal(4));
  CHECK_THROWS_AS((void)vp(BigInt(10), 4), std::invalid_argument);
  CHECK(PAdicVal::infinity() > PAdicVal(1000000));
  CHECK(PAdicVal::infinity().clamp(3) == 3u);
  CHECK_THROWS((void)PAdicVal::infinity().value());
}

TEST_CASE("vp is a valuation") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-100000, 100000);
  for (std::uint64_t p : {3u, 5u, 7u}) {
    for (int trial = 0; trial < 2000; ++trial) {
      const BigInt n(dist(rng)), m(dist(rng));
      if (n == 0 || m == 0) continue;
      CHECK(vp(n * m, p) == vp(n, p) + vp(m, p));
      const PAdicVal vs = vp(n + m, p), vn = vp(n, p), vm = vp(m, p);
      CHECK(vs >= std::min(vn, vm));
      if (vn != vm) CHECK(vs == std::min(vn, vm));
    }
  }
}

TEST_CASE("factorize") {
  const auto f = factorize(BigInt("600851475143"));
  REQUIRE(f.size() == 4);
  CHECK(f[0].first == 71);
  CHECK(f[3].first == 6857);
  const BigInt big = BigInt("1000000007") * BigInt("998244353") * 9;
  const auto g = factorize(big);
  REQUIRE(g.size() == 3);
  CHECK(g[0] == std::pair<BigInt, unsigned>(BigInt(3), 2u));
  CHECK(g[1].first == BigInt("998244353"));
  CHECK(g[2].first == BigInt("1000000007"));
}

TEST_CASE("unit_decomp") {
  const auto d31 = unit_decomp(3, 1);
  CHECK(d31.torsion_gen == 2);
  CHECK(d31.principal_gen == 1);  // 1+3 = 1 mod 3
  const auto d32 = unit_decomp(3, 2);
  CHECK(d32.torsion_gen == 8);
  CHECK(d32.principal_gen == 4);
  CHECK(unit_decomp(5, 1).torsion_gen == 2);
  CHECK(unit_decomp(7, 1).torsion_gen == 3);
  CHECK_THROWS_AS((void)unit_decomp(2, 3), unsupported_error);
  CHECK_THROWS_AS((void)unit_decomp(9, 1), std::invalid_argument);
}

TEST_CASE("torsion generator has exact order p-1") {
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (unsigned r = 1; r <= 4; ++r) {
      const auto d = unit_decomp(p, r);
      CHECK(powmod(d.torsion_gen, p - 1, d.modulus) == 1);
      for (std::uint64_t q : prime_divisors(BigInt(static_cast<unsigned long>(p - 1))))
        CHECK(powmod(d.torsion_gen, (p - 1) / q, d.modulus) != 1);
      if (r >= 2) CHECK(powmod(d.principal_gen, upow(p, r - 2), d.modulus) != 1);
      CHECK(powmod(d.principal_gen, upow(p, r - 1), d.modulus) == 1);
    }
  }
}

TEST_CASE("discrete_log") {
  const auto d = unit_decomp(3, 2);
  CHECK(discrete_log(1, d) == UnitLog{0, 0});
  CHECK(discrete_log(4, d) == UnitLog{0, 1});
  CHECK(discrete_log(8, d) == UnitLog{1, 0});
  CHECK_THROWS_AS((void)discrete_log(6, d), std::invalid_argument);
}

TEST_CASE("discrete_log round trip over all units") {
  for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{3, 5}, {5, 3}, {7, 2}, {3, 1}}) {
    const auto d = unit_decomp(p, r);
    std::set<std::pair<std::uint64_t, std::uint64_t>> logs;
    for (std::uint64_t u = 1; u < d.modulus; ++u) {
      if (u % p == 0) continue;
      const UnitLog l = discrete_log(u, d);
      CHECK(l.a < p - 1);
      CHECK(l.b < d.principal_order);
      CHECK(unit_from_log(l, d) == u);
      logs.insert({l.a, l.b});
    }
    CHECK(logs.size() == d.modulus / p * (p - 1));
  }
}

TEST_CASE("compute_s examples") {
  CHECK(compute_s(BigInt(28), 3, 2) == 0);
  CHECK(compute_s(BigInt(10), 3, 2) == 1);
  CHECK(compute_s(BigInt(2), 3, 1) == 1);
  CHECK(compute_s(BigInt(2), 3, 2) == 2);
  CHECK(compute_s(BigInt(2), 5, 1) == 1);
  CHECK_THROWS_AS((void)compute_s(BigInt(6), 3, 2), std::invalid_argument);
  // a^{p-1} - 1 far beyond machine words
  CHECK(compute_s(BigInt("123456789012345678901234567891"), 7, 3) <= 3);
}

namespace {

// a is a p^k-th power residue modulo p^{2r+1}
bool is_power_residue(std::uint64_t a, std::uint64_t p, unsigned k, std::uint64_t mod) {
  const std::uint64_t e = upow(p, k);
  for (std::uint64_t x = 1; x < mod; ++x) {
    if (x % p == 0) continue;
    if (powmod(x, e, mod) == a % mod) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("compute_s agrees with exhaustive power-residue search") {
  for (auto [p, r] : {std::pair<std::uint64_t, unsigned>{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}}) {
    if (upow(p, r) > 27) continue;
    const std::uint64_t mod = upow(p, 2 * r + 1);
    for (std::uint64_t a = 1; a < 4 * p * p; ++a) {
      if (a % p == 0) continue;
      const unsigned s = compute_s(BigInt(static_cast<unsigned long>(a)), p, r);
      CAPTURE(p);
      CAPTURE(r);
      CAPTURE(a);
      CHECK(is_power_residue(a, p, r - s, mod));
      if (s > 0) CHECK_FALSE(is_power_residue(a, p, r - s + 1, mod));
    }
  }
}

TEST_CASE("fractions") {
  CHECK(to_fraction_string(Rational(3, 6)) == "1/2");
  CHECK(to_fraction_string(Rational(-4)) == "-4/1");
  CHECK(parse_fraction("6/4") == Rational(3, 2));
  CHECK(parse_fraction("7") == Rational(7));
  CHECK_THROWS((void)parse_fraction("x/2"));
  CHECK_THROWS((void)parse_fraction("1/0"));
}
