#include "doctest.h"

#include <random>

#include "qfock/laurent.hpp"

using namespace qfock;

namespace {

LaurentZ random_poly(std::mt19937& rng, int span = 4, int width = 5) {
  std::uniform_int_distribution<int> exp(-span, span);
  std::uniform_int_distribution<int> coeff(-width, width);
  std::uniform_int_distribution<int> count(0, 5);
  std::vector<LaurentZ::Term> t;
  for (int k = count(rng); k > 0; --k) t.emplace_back(exp(rng), BigInt(coeff(rng)));
  return LaurentZ::from_terms(std::move(t));
}

}  // namespace

TEST_CASE("qint values") {
  CHECK(qint(1) == LaurentZ(1));
  CHECK(to_string(qint(2)) == "q^-1+q");
  CHECK(to_string(qint(3)) == "q^-2+1+q^2");
  CHECK(qint(0).is_zero());
  for (int m = 1; m < 10; ++m) CHECK(qint(-m) == -qint(m));
}

TEST_CASE("qint matches the defining quotient") {
  const LaurentZ den = LaurentZ::monomial(1) - LaurentZ::monomial(-1);
  for (int m = 1; m < 12; ++m) {
    const LaurentZ num = LaurentZ::monomial(m) - LaurentZ::monomial(-m);
    CHECK(exact_div(num, den) == qint(m));
  }
}

TEST_CASE("qbinom values") {
  CHECK(qbinom(5, 0) == LaurentZ(1));
  CHECK(qbinom(2, 1) == qint(2));
  CHECK(to_string(qbinom(4, 2)) == "q^-4+q^-2+2+q^2+q^4");
  CHECK_THROWS_AS(qbinom(2, 3), std::invalid_argument);
}

TEST_CASE("q-Pascal recursion") {
  for (int m = 1; m <= 12; ++m) {
    for (int r = 1; r < m; ++r) {
      const LaurentZ rhs = qbinom(m - 1, r - 1).shifted(m - r) + qbinom(m - 1, r).shifted(-r);
      CHECK(qbinom(m, r) == rhs);
    }
  }
}

TEST_CASE("bar invariance of q-numbers") {
  for (int m = 0; m <= 8; ++m) {
    CHECK(qint(m).bar() == qint(m));
    CHECK(qfact(m).bar() == qfact(m));
    for (int r = 0; r <= m; ++r) CHECK(qbinom(m, r).bar() == qbinom(m, r));
  }
}

TEST_CASE("exact division") {
  const LaurentZ a = LaurentZ::monomial(2) - LaurentZ::monomial(-2);
  const LaurentZ b = LaurentZ::monomial(1) - LaurentZ::monomial(-1);
  CHECK(exact_div(a, b) == qint(2));
  CHECK(exact_div(qfact(3) * qint(2), qfact(3)) == qint(2));
  CHECK_FALSE(exact_div(qint(2), b).has_value());
  CHECK_FALSE(exact_div(LaurentZ(3), LaurentZ(2)).has_value());
  CHECK(exact_div(LaurentQ(promote(LaurentZ(3))), promote(LaurentZ(2))) ==
        LaurentQ(BigRat(3, 2)));
  CHECK_THROWS_AS(exact_div(a, LaurentZ()), std::domain_error);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng);
    const auto b = random_poly(rng);
    const auto c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentZ());
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
    CHECK(to_integral(promote(a)) == a);
  }
}

TEST_CASE("no stored zero coefficients") {
  const LaurentZ p = LaurentZ::from_terms({{1, 2}, {1, -2}, {0, 0}, {3, 1}});
  REQUIRE(p.size() == 1);
  CHECK(p.terms()[0].first == 3);
  const LaurentZ s = qint(2) - LaurentZ::monomial(1);
  CHECK(s == LaurentZ::monomial(-1));
}

TEST_CASE("demotion requires unit denominators") {
  const LaurentQ half = LaurentQ::monomial(1, BigRat(1, 2));
  CHECK_FALSE(is_integral(half));
  CHECK_THROWS_AS(to_integral(half), std::domain_error);
  CHECK(is_integral(half + half));
}

TEST_CASE("text round trip") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poly(rng, 6, 40);
    CHECK(parse_laurent_z(to_string(a)) == a);
  }
  CHECK(to_string(parse_laurent("3/2*q - q^(-1) + 2")) == "-q^-1+2+3/2*q");
  CHECK(parse_laurent(" q^2 + 1 + q^-2 ") == promote(qint(3)));
  CHECK(to_string(LaurentZ()) == "0");
}

TEST_CASE("parse errors carry a position") {
  try {
    (void)parse_laurent("q + * 2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_laurent(""), ParseError);
  CHECK_THROWS_AS(parse_laurent("q q"), ParseError);
  CHECK_THROWS_AS(parse_laurent_z("1/2"), ParseError);
}
