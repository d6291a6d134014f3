#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radram/conductor.hpp"
#include "radram/errors.hpp"

using namespace radram;

namespace {

const Character& find_char(const std::vector<Character>& chars, unsigned lev, unsigned pr) {
  for (const auto& c : chars)
    if (c.level == lev && c.prim_degree == pr) return c;
  throw std::logic_error("no such character");
}

struct Case {
  LocalCase kase;
  GroupDesc G;
};

std::vector<Case> range_cases() {
  std::vector<Case> out;
  for (std::uint64_t p : {3u, 5u, 7u})
    for (unsigned r = 1; r <= 3; ++r)
      for (unsigned s = 0; s <= r; ++s) {
        const GroupDesc G = GroupDesc::make(p, r, s);
        if (G.order() > 100000) continue;
        out.push_back({LocalCase::Unit, G});
        if (s == r) out.push_back({LocalCase::Eisenstein, G});
      }
  return out;
}

}  // namespace

TEST_CASE("conductor exponents on small groups") {
  const GroupDesc G = GroupDesc::make(3, 1, 1);
  const auto chars = character_table(G);
  const Filtration up = upper_filtration(LocalCase::Unit, G);
  CHECK(c_exp_definitional(find_char(chars, 0, 0), up) == -1);
  CHECK(c_exp_definitional(find_char(chars, 0, 1), up) == 0);
  CHECK(c_exp_definitional(find_char(chars, 1, 1), up) == Rational(1, 2));
  CHECK(artin_conductor(find_char(chars, 0, 0), LocalCase::Unit, G).f_val == 0);
  CHECK(artin_conductor(find_char(chars, 1, 1), LocalCase::Unit, G).f_val == 3);
  CHECK(artin_conductor(find_char(chars, 1, 1), LocalCase::Eisenstein, G).f_val == 5);

  CHECK(c_exp_closed(0, 2, LocalCase::Unit, 3) == 1);
  CHECK(c_exp_closed(1, 1, LocalCase::Unit, 3) == Rational(1, 2));
  CHECK(c_exp_closed(1, 2, LocalCase::Eisenstein, 3) == Rational(3, 2));
  CHECK(c_exp_closed(1, 3, LocalCase::Eisenstein, 3) == 2);
  CHECK_THROWS_AS((void)c_exp_closed(1, 1, LocalCase::Tame, 3), std::invalid_argument);
}

TEST_CASE("definitional and closed exponents agree and conductors are integral") {
  for (const auto& c : range_cases()) {
    CAPTURE(c.G.to_string());
    CAPTURE(to_string(c.kase));
    const auto table = conductor_table(c.kase, c.G);
    for (const auto& rec : table) {
      CHECK(rec.f_val >= 0);
      CHECK((rec.f_val == 0) == rec.character.is_trivial());
      CHECK((rec.c_exp == -1) == rec.character.is_trivial());
    }
  }
}

TEST_CASE("discriminant anchors") {
  CHECK(disc_vp_local_sum(LocalCase::Unit, GroupDesc::make(3, 1, 1)) == 7);
  CHECK(disc_vp_local_sum(LocalCase::Eisenstein, GroupDesc::make(3, 1, 1)) == 11);
  CHECK(disc_vp_local_sum(LocalCase::Unit, GroupDesc::make(3, 2, 2)) == 121);
  CHECK(disc_vp_local_sum(LocalCase::Unit, GroupDesc::make(3, 2, 1)) == 31);
  CHECK(disc_vp_local_sum(LocalCase::Unit, GroupDesc::make(3, 2, 0)) == 9);
  CHECK(disc_vp_local_sum(LocalCase::Eisenstein, GroupDesc::make(3, 2, 2)) == 165);
  CHECK(disc_vp_local_closed(LocalCase::Unit, GroupDesc::make(3, 1, 1)) == 7);
  CHECK(disc_vp_local_closed(LocalCase::Eisenstein, GroupDesc::make(3, 1, 1)) == 11);
  CHECK(disc_vp_local_closed(LocalCase::Eisenstein, GroupDesc::make(3, 2, 2)) == 165);
  CHECK_THROWS_AS((void)disc_vp_local_closed(LocalCase::Eisenstein, GroupDesc::make(3, 2, 1)), std::invalid_argument);
}

TEST_CASE("different sums") {
  CHECK(different_sum(lower_filtration(LocalCase::Unit, GroupDesc::make(3, 1, 1))) == 7);
  CHECK(different_sum(lower_filtration(LocalCase::Eisenstein, GroupDesc::make(3, 1, 1))) == 11);
  Filtration empty;
  empty.numbering = Numbering::Lower;
  CHECK(different_sum(empty) == 0);
  CHECK(different_sum(lower_filtration(classify_prime(5, 5, 2 * 125 * 125 * 5 + 5))) >= 0);
  const auto tame = classify_prime(2, 5, 4);
  CHECK(different_sum(lower_filtration(tame)) == 4);
}

TEST_CASE("triple agreement across the range") {
  for (const auto& c : range_cases()) {
    CAPTURE(c.G.to_string());
    CAPTURE(to_string(c.kase));
    const LocalDiscriminant d = local_discriminant(c.kase, c.G);
    CHECK(d.sum_method == "table");
    REQUIRE(d.closed.has_value());
    CHECK(d.sum == *d.closed);
    CHECK(d.sum == d.different);
    CHECK(d.agree());
    CHECK(disc_vp_local_grouped(c.kase, c.G) == d.sum);
  }
}

TEST_CASE("cyclotomic discriminant exponents") {
  for (std::uint64_t p : {3u, 5u, 7u, 11u})
    for (unsigned r = 1; r <= 4; ++r) {
      const BigInt classical = r * ipow(p, r) - (r + 1) * ipow(p, r - 1);
      const GroupDesc G = GroupDesc::make(p, r, 0);
      CHECK(disc_vp_local_closed(LocalCase::Unit, G) == classical);
      CHECK(different_sum(lower_filtration(LocalCase::Unit, G)) == classical);
    }
}

TEST_CASE("partial sums") {
  for (const auto& c : range_cases()) {
    CAPTURE(c.G.to_string());
    CAPTURE(to_string(c.kase));
    const auto parts = partial_sums(c.kase, c.G);
    BigInt total = 0;
    for (const auto& ps : parts) {
      CAPTURE(ps.label);
      CHECK(ps.grouped == ps.closed);
      total += ps.grouped;
    }
    CHECK(total == disc_vp_local_closed(c.kase, c.G));
  }
  // The top sum is (p^{2s}-1)/(p+1); the same sum over p-1 would give 10 here.
  const auto unit = partial_sums(LocalCase::Unit, GroupDesc::make(3, 2, 2));
  CHECK(unit.back().closed == 20);
  CHECK(unit.back().grouped == 20);
}

TEST_CASE("global discriminant exponents") {
  CHECK(disc_vp_global(9, 10, 3) == 93);
  CHECK(disc_vp_global_unit_closed(3, 2, 1) == 93);
  CHECK(disc_vp_global(3, 2, 3) == 7);
  CHECK(disc_vp_global(3, 3, 3) == 11);
  CHECK_THROWS_AS((void)disc_vp_global(15, 2, 3), std::invalid_argument);
  for (std::uint64_t p : {3u, 5u, 7u})
    for (unsigned r = 1; r <= 3; ++r)
      for (unsigned s = 0; s <= r; ++s) {
        const GroupDesc G = GroupDesc::make(p, r, s);
        if (G.order() > 100000) continue;
        CAPTURE(G.to_string());
        CHECK(ipow(p, r - s) * disc_vp_local_closed(LocalCase::Unit, G) == disc_vp_global_unit_closed(p, r, s));
      }
}
