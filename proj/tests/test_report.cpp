#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radram/report.hpp"
#include "radram/verify.hpp"

using namespace radram;

namespace {

const std::vector<std::pair<long, long>> kInputs = {{2, 3}, {3, 3}, {3, 15}, {2, 9}, {10, 9}, {2, 15}, {7, 45}, {8, 3}, {54, 9}, {5, 6}, {-2, 27}};

}  // namespace

TEST_CASE("integer and rational encoding") {
  CHECK(to_json(BigInt(42)) == Json(42));
  const BigInt huge = ipow(BigInt(10), 30);
  CHECK(to_json(huge) == Json(huge.get_str()));
  CHECK(bigint_from_json(to_json(huge)) == huge);
  CHECK(bigint_from_json(Json(-7)) == -7);
  CHECK(to_json(Rational(3, 2)) == Json("3/2"));
  CHECK(to_json(Rational(4)) == Json("4/1"));
  CHECK(rational_from_json(Json("-1/1")) == -1);
  CHECK_THROWS_AS((void)rational_from_json(Json(2)), std::invalid_argument);
  CHECK_THROWS_AS((void)bigint_from_json(Json("x1")), std::invalid_argument);
}

TEST_CASE("reports round-trip losslessly") {
  for (auto [a, m] : kInputs) {
    CAPTURE(a);
    CAPTURE(m);
    const Report r = analyze(BigInt(m), BigInt(a));
    const Json j = to_json(r);
    const Report back = report_from_json(j);
    CHECK(back == r);
    CHECK(dump(to_json(back)) == dump(j));
    CHECK(dump(Json::parse(dump(j))) == dump(j));
  }
}

TEST_CASE("identical inputs give identical documents") {
  CHECK(dump(to_json(analyze(45, 7))) == dump(to_json(analyze(45, 7))));
  CHECK(dump(to_json(analyze(9, 10))) == dump(to_json(analyze(9, 10))));
}

TEST_CASE("report contents") {
  const Report r = analyze(3, 2);
  REQUIRE(r.violations.empty());
  REQUIRE(r.primes.size() == 2);
  const PrimeBlock& b = r.primes[1];
  CHECK(b.ctx.p == 3);
  REQUIRE(b.disc.has_value());
  CHECK(b.disc->sum == 7);
  CHECK(b.disc->agree());
  CHECK(*b.disc_global == 7);
  CHECK(b.conductors.size() == 3);
  const Json j = to_json(b);
  CHECK(j["v_p_disc"]["agree"] == true);
  CHECK(j["v_p_disc"]["different"] == 7);
  CHECK(j["upper"]["steps"][1]["break"] == "1/2");
  CHECK(j["local"]["case"] == "unit");

  const Report e = analyze(15, 3);
  CHECK(e.primes[0].ctx.p == 3);
  CHECK(e.primes[0].e_global == 30);
  CHECK_FALSE(e.primes[0].disc_global.has_value());
  CHECK(e.primes[1].ctx.kase == LocalCase::Unit);
  const Report t = analyze(9, 2);
  CHECK(t.primes[0].ctx.kase == LocalCase::Tame);
  CHECK(t.primes[0].lower.cyclic_only);
  CHECK(t.primes[0].characters.empty());

  const Report bad = analyze(3, 8);
  CHECK(bad.primes.empty());
  REQUIRE(bad.violations.size() == 1);
  CHECK(to_json(bad)["valid"] == false);
}

TEST_CASE("character groups reproduce the enumerated conductors") {
  const GroupDesc G = GroupDesc::make(5, 2, 1);
  for (LocalCase kase : {LocalCase::Unit}) {
    BigInt grouped = 0;
    for (const auto& g : character_groups(kase, G)) grouped += g.count * g.degree * g.f_val;
    CHECK(grouped == disc_vp_local_sum(kase, G));
  }
}

TEST_CASE("character table document") {
  const CharacterTable t = CharacterTable::build(GroupDesc::make(3, 1, 1));
  const Json j = to_json(t);
  CHECK(j["ring_order"] == 6);
  CHECK(j["classes"].size() == 3);
  CHECK(j["characters"][2]["kind"] == "induced");
  CHECK(j["characters"][2]["twist"] == Json::array({0, 0}));
  CHECK(j["values"][2][2] == Json::array({2, 0}));
  CHECK(character_from_json(j["characters"][2]) == t.chars[2]);
  CHECK(render(t).find("induced k=1") != std::string::npos);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS((void)report_from_json(Json::object()), std::invalid_argument);
  Json j = to_json(analyze(3, 2));
  j["primes"][0]["local"]["case"] = "weird";
  CHECK_THROWS_AS((void)report_from_json(j), std::invalid_argument);
  Json f = to_json(upper_filtration(LocalCase::Unit, GroupDesc::make(3, 1, 1)));
  f["numbering"] = "sideways";
  CHECK_THROWS_AS((void)filtration_from_json(f), std::invalid_argument);
}

TEST_CASE("verification of one group") {
  const VerificationReport rep = verify_group(GroupDesc::make(3, 2, 1), 100000);
  CHECK(rep.passed());
  CHECK(rep.count(CheckStatus::Fail) == 0);
  CHECK(rep.count(CheckStatus::Known) == 1);
  const Json j = to_json(rep);
  CHECK(j["passed"] == true);
  CHECK(j["summary"]["fail"] == 0);
  const VerificationReport small = verify_group(GroupDesc::make(3, 2, 1), 10);
  CHECK(small.count(CheckStatus::Skip) > 0);
  CHECK(small.passed());
}
