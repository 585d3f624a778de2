#include "doctest.h"

#include <random>

#include "qfock/linalg.hpp"

using namespace qfock;

namespace {

Matrix<BigRat> random_rational(std::mt19937& rng, int rows, int cols, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  Matrix<BigRat> m(static_cast<std::size_t>(rows), std::vector<BigRat>(static_cast<std::size_t>(cols)));
  for (auto& row : m) {
    for (auto& x : row) x = dist(rng);
  }
  return m;
}

}  // namespace

TEST_CASE("Bareiss determinant matches Leibniz expansion") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(-2, 2), c(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix<LaurentZ> m(3, std::vector<LaurentZ>(3));
    for (auto& row : m) {
      for (auto& x : row) x = LaurentZ::from_terms({{e(rng), BigInt(c(rng))}, {e(rng), BigInt(c(rng))}});
    }
    const LaurentZ leibniz = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    CHECK(bareiss_determinant(m) == leibniz);
    CHECK(cofactor_determinant(m) == leibniz);
  }
}

TEST_CASE("Bareiss rank over Q(q)") {
  // Rows 0 and 1 are proportional over Q(q) but not over Q.
  Matrix<LaurentZ> m = {{qint(2), LaurentZ(1)}, {qint(2) * qint(3), qint(3)}, {LaurentZ(0), LaurentZ(0)}};
  CHECK(bareiss_rank(m) == 1);
  m[2][1] = LaurentZ::monomial(1);
  CHECK(bareiss_rank(m) == 2);
  CHECK(bareiss_rank(Matrix<LaurentZ>{}) == 0);
}

TEST_CASE("kernel vectors are annihilated and rank-nullity holds") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int rows = 1 + trial % 4;
    const int cols = 2 + trial % 5;
    auto m = random_rational(rng, rows, cols, 2);
    const auto ker = kernel_basis(m, cols, BigRat(0));
    CHECK(rank(m) + static_cast<int>(ker.size()) == cols);
    for (const auto& v : ker) {
      for (const auto& row : m) {
        BigRat acc = 0;
        for (int k = 0; k < cols; ++k) acc += row[k] * v[k];
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("inverse over Q(zeta)") {
  const int l = 5;
  auto z = [&](int e) { return CyclotomicNum::zeta_power(l, e); };
  const CyclotomicNum one(l, BigRat(1));
  Matrix<CyclotomicNum> a = {{z(1) + one, z(2)}, {z(3), z(4) - one}};
  const auto inv = inverse(a, CyclotomicNum(l));
  REQUIRE(inv);
  const auto prod = multiply(a, *inv, CyclotomicNum(l));
  CHECK(prod[0][0] == one);
  CHECK(prod[1][1] == one);
  CHECK(prod[0][1].is_zero());
  CHECK(prod[1][0].is_zero());

  Matrix<CyclotomicNum> singular = {{z(1), z(2)}, {z(2), z(3)}};
  CHECK_FALSE(inverse(singular, CyclotomicNum(l)).has_value());
}
