#include "doctest.h"

#include <random>

#include "qfock/cyclotomic.hpp"

using namespace qfock;

namespace {

LaurentZ random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-8, 8);
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::vector<LaurentZ::Term> t;
  for (int k = 0; k < 5; ++k) t.emplace_back(exp(rng), BigInt(coeff(rng)));
  return LaurentZ::from_terms(std::move(t));
}

std::vector<BigInt> ints(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == ints({1, 1}));
  CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
  CHECK(euler_phi(30) == 8);
  CHECK(euler_phi(7) == 6);
}

TEST_CASE("specialize examples") {
  for (int m = -4; m <= 6; ++m) CHECK(specialize(qint(m), 1) == CyclotomicNum(1, BigRat(m)));
  CHECK(specialize(qint(2), 4).is_zero());
  CHECK(specialize(qint(3), 2) == CyclotomicNum(2, BigRat(3)));
  CHECK(specialize(qint(3), 3).is_zero());
  CHECK(specialize(qint(2), 3) == CyclotomicNum(3, BigRat(-1)));
}

TEST_CASE("zeta is a primitive root") {
  for (int l = 1; l <= 30; ++l) {
    const auto z = CyclotomicNum::zeta_power(l, 1);
    CyclotomicNum p(l, BigRat(1));
    for (int d = 1; d <= l; ++d) {
      p *= z;
      if (d < l) CHECK_FALSE(p == CyclotomicNum(l, BigRat(1)));
    }
    CHECK(p == CyclotomicNum(l, BigRat(1)));
    CHECK(specialize(LaurentZ::monomial(-1), l) == CyclotomicNum::zeta_power(l, l - 1));
  }
}

TEST_CASE("specialize is a ring homomorphism") {
  std::mt19937 rng(3);
  for (int l = 1; l <= 12; ++l) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_poly(rng);
      const auto b = random_poly(rng);
      CHECK(specialize(a * b, l) == specialize(a, l) * specialize(b, l));
      CHECK(specialize(a + b, l) == specialize(a, l) + specialize(b, l));
    }
  }
}

TEST_CASE("specialize at powers") {
  std::mt19937 rng(5);
  for (int l = 2; l <= 10; ++l) {
    for (int k = 1; k <= 2 * l; ++k) {
      const auto a = random_poly(rng);
      CHECK(specialize_at_power(a, l, k) == specialize(a.substitute_power(k), l));
    }
  }
}

TEST_CASE("inverse") {
  std::mt19937 rng(9);
  for (int l = 1; l <= 15; ++l) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = specialize(random_poly(rng), l);
      if (a.is_zero()) {
        CHECK_THROWS_AS(a.inverse(), std::domain_error);
        continue;
      }
      CHECK(a * a.inverse() == CyclotomicNum(l, BigRat(1)));
    }
  }
}

TEST_CASE("text form") {
  CHECK(to_string(CyclotomicNum(5)) == "0");
  CHECK(to_string(CyclotomicNum::zeta_power(3, 2)) == "-1-z");
  CHECK(to_string(CyclotomicNum::from_polynomial(7, {BigRat(1, 2), BigRat(0), BigRat(-3)})) ==
        "1/2-3*z^2");
}
