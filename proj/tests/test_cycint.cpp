#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "radram/cycint.hpp"
#include "radram/errors.hpp"

using namespace radram;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(18).size() == 7);  // phi(18) = 6
  CHECK(cyclotomic_polynomial(2058).size() == 589);
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& c = cyclotomic_polynomial(105);
  CHECK(c[7] == -2);
}

TEST_CASE("reduction examples") {
  CHECK(cyc_reduce(CycInt(3, {0, 1, 1})).coeffs()[0] == -1);
  CHECK(cyc_reduce(CycInt(3, {0, 1, 1})) == CycInt::integer(3, -1));
  const CycInt z2 = CycInt::monomial(4, 1, 2);
  const CycInt r = cyc_reduce(z2);
  CHECK(std::vector<std::int64_t>(r.coeffs().begin(), r.coeffs().end()) == std::vector<std::int64_t>{-1, 0, 0, 0});
  for (std::int64_t n : {-5, 0, 1, 12}) {
    const CycInt e = CycInt::integer(18, n);
    CHECK(std::equal(e.coeffs().begin(), e.coeffs().end(), cyc_reduce(e).coeffs().begin()));
    CHECK(cyc_reduce(e).as_integer() == n);
  }
}

TEST_CASE("sum of all N-th roots of unity vanishes") {
  for (std::uint64_t n : {2u, 6u, 18u, 20u, 54u, 98u}) {
    CycInt x(n);
    for (std::uint64_t e = 0; e < n; ++e) x.add_term(1, e);
    CHECK(x.is_zero());
  }
}

TEST_CASE("reduction is idempotent and a ring morphism") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> coef(-5, 5);
  for (std::uint64_t n : {3u, 9u, 12u, 18u, 20u, 54u}) {
    for (int trial = 0; trial < 40; ++trial) {
      CycInt x(n), y(n);
      for (std::uint64_t e = 0; e < n; ++e) {
        x.add_term(coef(rng), e);
        y.add_term(coef(rng), e);
      }
      const CycInt rx = x.reduced(), ry = y.reduced();
      CHECK(rx.is_reduced());
      CHECK(std::equal(rx.coeffs().begin(), rx.coeffs().end(), rx.reduced().coeffs().begin()));
      const CycInt lhs = (x * y).reduced(), rhs = (rx * ry).reduced();
      CHECK(std::equal(lhs.coeffs().begin(), lhs.coeffs().end(), rhs.coeffs().begin()));
      CHECK((x + y) == (rx + ry));
      CHECK(x.conj().conj() == x);
    }
  }
}

TEST_CASE("conjugation and division") {
  const CycInt z = CycInt::monomial(9, 1, 1);
  CHECK(z * z.conj() == CycInt::integer(9, 1));
  CycInt six = CycInt(9, {0, 6, 0, 0, 0, 0, 0, 0, 12});
  CHECK(six.exact_div(6) == CycInt(9, {0, 1, 0, 0, 0, 0, 0, 0, 2}));
  CHECK_THROWS_AS((void)six.exact_div(5), internal_error);
  CHECK_THROWS_AS((void)(CycInt(3) + CycInt(4)), std::invalid_argument);
  CHECK(embed(CycInt::monomial(3, 2, 1), 9) == CycInt::monomial(9, 2, 3));
  CHECK(CycInt::monomial(6, -1, 3) == CycInt::integer(6, 1));
  CHECK(CycInt(3, {0, 1, 1}).to_string() == "-1");
  CHECK(CycInt::monomial(9, -2, 4).to_string() == "-2*z^4");
}

TEST_CASE("overflow is an error, not a wrap") {
  CycInt x = CycInt::integer(3, INT64_MAX);
  CHECK_THROWS_AS(x.add_term(1, 0), internal_error);
  CHECK_THROWS_AS(x *= 2, internal_error);
}
