#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "radram/chartab.hpp"

using namespace radram;

namespace {

std::size_t count_kind(const std::vector<Character>& t, CharKind kind, std::uint64_t degree) {
  std::size_t n = 0;
  for (const auto& c : t) n += c.kind == kind && c.degree == degree;
  return n;
}

const Character& find(const std::vector<Character>& t, CharKind kind, unsigned k, UnitLog twist) {
  for (const auto& c : t)
    if (c.kind == kind && c.k == k && c.twist == twist) return c;
  throw std::runtime_error("character not found");
}

}  // namespace

TEST_CASE("table shape") {
  const auto t311 = character_table(GroupDesc::make(3, 1, 1));
  CHECK(count_kind(t311, CharKind::Linear, 1) == 2);
  CHECK(count_kind(t311, CharKind::Induced, 2) == 1);

  const auto t322 = character_table(GroupDesc::make(3, 2, 2));
  CHECK(count_kind(t322, CharKind::Linear, 1) == 6);
  CHECK(count_kind(t322, CharKind::Induced, 2) == 3);
  CHECK(count_kind(t322, CharKind::Induced, 6) == 1);

  const auto t321 = character_table(GroupDesc::make(3, 2, 1));
  CHECK(t321.size() == 9);
  CHECK(count_kind(t321, CharKind::Induced, 2) == 3);

  for (std::uint64_t p : {3u, 5u, 7u})
    for (unsigned r = 1; r <= 3; ++r)
      for (unsigned s = 0; s <= r; ++s) {
        const GroupDesc G = GroupDesc::make(p, r, s);
        const auto t = character_table(G);
        std::uint64_t sq = 0;
        for (const auto& c : t) {
          sq += c.degree * c.degree;
          CHECK(c.level == level(c));
          if (c.kind == CharKind::Induced) CHECK(c.prim_degree >= c.level);
        }
        CHECK(sq == G.order());
        CHECK(t.size() == class_count(G));
      }
}

TEST_CASE("roots of unity sums") {
  CHECK(rou_sum(0, 3, 2).as_integer() == 6);
  CHECK(rou_sum(1, 3, 2).as_integer() == -3);
  CHECK(rou_sum(2, 3, 2).as_integer() == 0);
  for (std::uint64_t p : {3u, 5u, 7u})
    for (unsigned r = 1; r <= 3; ++r) {
      const auto pr1 = static_cast<std::int64_t>(upow(p, r - 1));
      CHECK(rou_sum(0, p, r).as_integer() == pr1 * static_cast<std::int64_t>(p - 1));
      CHECK(rou_sum(1, p, r).as_integer() == -pr1);
      for (unsigned sp = 2; sp <= r; ++sp) CHECK(rou_sum(sp, p, r).as_integer() == 0);
    }
}

TEST_CASE("value examples") {
  const GroupDesc S3 = GroupDesc::make(3, 1, 1);
  const auto t = character_table(S3);
  const Character& ind = find(t, CharKind::Induced, 1, {0, 0});
  CHECK(char_value(ind, conj_class_of(identity(), S3), S3).as_integer() == 2);
  CHECK(char_value(ind, conj_class_of({1, 2}, S3), S3).as_integer() == 0);
  CHECK(char_value(ind, conj_class_of({1, 1}, S3), S3).as_integer() == -1);
  const Character& sign = find(t, CharKind::Linear, 0, {1, 0});
  CHECK(char_value(sign, conj_class_of({0, 2}, S3), S3).as_integer() == -1);
  for (const auto& chi : t) CHECK(char_value(chi, conj_class_of(identity(), S3), S3).as_integer() == static_cast<std::int64_t>(chi.degree));
}

TEST_CASE("level, primitive degree and null subgroup") {
  const GroupDesc S3 = GroupDesc::make(3, 1, 1);
  const auto t = character_table(S3);
  const Character& triv = find(t, CharKind::Linear, 0, {0, 0});
  CHECK(triv.level == 0);
  CHECK(triv.prim_degree == 0);
  CHECK(null_subgroup(triv, S3) == SubgroupDesc{1, 0});
  const Character& ind = find(t, CharKind::Induced, 1, {0, 0});
  CHECK(ind.level == 1);
  CHECK(ind.prim_degree == 1);
  CHECK(null_subgroup(ind, S3) == SubgroupDesc{0, 1});

  const GroupDesc K9 = GroupDesc::make(3, 2, 2);
  const auto t9 = character_table(K9);
  const Character& twisted = find(t9, CharKind::Induced, 1, {0, 1});
  CHECK(twisted.level == 1);
  CHECK(twisted.prim_degree == 2);
  const Character& top = find(t9, CharKind::Induced, 2, {0, 0});
  CHECK(top.degree == 6);
  CHECK(null_subgroup(top, K9) == SubgroupDesc{0, 2});
}

TEST_CASE("twists restrict bijectively to the congruence subgroup") {
  for (std::uint64_t p : {3u, 5u, 7u})
    for (unsigned r = 1; r <= 3; ++r) {
      const GroupDesc G = GroupDesc::make(p, r, r);
      const auto d = unit_decomp(p, r);
      const auto t = character_table(G);
      for (unsigned k = 1; k <= r; ++k) {
        // G(p^r)^k is cyclic, generated by 1 + p^k; a character on it is fixed by that value.
        const ConjClass gen = conj_class_of({0, (1 + upow(p, k)) % G.pr()}, G);
        std::set<std::uint64_t> images;
        std::size_t n = 0;
        for (const auto& chi : t) {
          if (chi.kind != CharKind::Induced || chi.k != k) continue;
          Character lin = chi;
          lin.kind = CharKind::Linear;
          lin.k = 0;
          images.insert(char_value_monomial(lin, gen, G, d).e);
          ++n;
        }
        CHECK(n == upow(p, r - k));
        CHECK(images.size() == n);
      }
    }
}

TEST_CASE("count_by") {
  const GroupDesc G = GroupDesc::make(3, 2, 2);
  CHECK(count_by(0, 0, G) == 1);
  CHECK(count_by(0, 1, G) == 1);
  CHECK(count_by(1, 2, G) == 2);
  CHECK(count_by(2, 1, G) == 0);
  for (std::uint64_t p : {3u, 5u, 7u})
    for (unsigned r = 1; r <= 3; ++r)
      for (unsigned s = 0; s <= r; ++s) {
        const GroupDesc H = GroupDesc::make(p, r, s);
        std::uint64_t total = 0;
        for (unsigned k = 0; k <= s; ++k)
          for (unsigned t = 0; t <= r; ++t) {
            total += count_by(k, t, H);
            std::uint64_t tally = 0;
            for (const auto& chi : character_table(H)) tally += chi.level == k && chi.prim_degree == t;
            CHECK(tally == count_by(k, t, H));
          }
        CHECK(total == class_count(H));
      }
}

TEST_CASE("subgroup descriptors") {
  const GroupDesc G = GroupDesc::make(3, 2, 2);
  CHECK(subgroup_order({2, 0}, G) == 54);
  CHECK(subgroup_order({1, 1}, G) == 9);
  CHECK(subgroup_order({0, 2}, G) == 1);
  CHECK(normalize({0, 5}, G) == SubgroupDesc{0, 2});
  CHECK(contained_in({1, 2}, {2, 1}, G));
  CHECK_FALSE(contained_in({2, 1}, {1, 2}, G));
  CHECK(intersect({2, 1}, {1, 0}, G) == SubgroupDesc{1, 1});
  CHECK(product({2, 2}, {0, 1}, G) == SubgroupDesc{2, 1});
  CHECK(is_normal({1, 1}, G));
  CHECK_FALSE(is_normal({0, 1}, G));
  CHECK(member({3, 4}, {1, 1}, G));
  CHECK_FALSE(member({1, 4}, {1, 1}, G));
}
