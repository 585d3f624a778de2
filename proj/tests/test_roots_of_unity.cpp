#include "doctest.h"

#include "qfock/roots_of_unity.hpp"

using namespace qfock;

TEST_CASE("specialization of lattice vectors") {
  const auto d = build_root_datum(Family::A, 1);
  const FockZ v = FockZ::basis(vacuum_label(d), qint(3));
  const auto s = specialize_vector(v, 3);
  CHECK(s.terms.empty());  // [3] vanishes at a primitive cube root of unity
  CHECK(specialize_vector(FockZ::basis(vacuum_label(d), qint(2)), 3).terms.at(vacuum_label(d)) ==
        CyclotomicNum(3, BigRat(-1)));
  CHECK_THROWS_AS(specialize_vector(FockQ::basis(vacuum_label(d), LaurentQ(BigRat(1, 2))), 3), std::domain_error);
}

TEST_CASE("split weights") {
  const auto d = build_root_datum(Family::A, 2);
  const auto w = split_weight(d, WeightLabel{{2, -1}, 7}, 3);
  // (eta, alpha_1) = 5, (eta, alpha_2) = -4, -d = -7
  CHECK(w.mu_prime == std::vector<int>{2, 2});
  CHECK(w.mu_double_prime == std::vector<int>{1, -2});
  CHECK(w.n_prime == 2);
  CHECK(w.n_double_prime == -3);
}

TEST_CASE("push-forward commutes with specialization") {
  const auto d = build_root_datum(Family::A, 2);
  const LatticeOperator op = [&](const FockZ& w) { return apply_x(d, 0, -1, -1, w); };
  for (const auto& b : enumerate_basis(d, 2)) {
    const FockZ v = FockZ::basis(b, qint(2) + LaurentZ::monomial(3));
    CHECK(push_forward(op, specialize_vector(v, 5)) == specialize_vector(op(v), 5));
  }
}

TEST_CASE("dual Heisenberg elements for A1 at l = 3") {
  const auto d = build_root_datum(Family::A, 1);
  const auto h = dual_heisenberg(d, 0, 1, 3);
  // M(1) = q + q^-1 = -1 at a primitive cube root of unity.
  REQUIRE(h.coeffs.size() == 1);
  CHECK(h.coeffs[0] == CyclotomicNum(3, BigRat(-1)));
  const auto s = specialize_vector(vacuum(d), 3);
  // [h^{1,1}, P~_{1,1}] acts as 1 on the vacuum.
  CHECK(dual_commutator(d, h, 0, s) == s);
}

TEST_CASE("dual construction detects singular pairing matrices") {
  const auto a2 = build_root_datum(Family::A, 2);
  CHECK_THROWS_AS(dual_heisenberg(a2, 0, 1, 3), CoprimalityViolation);
  try {
    dual_heisenberg(a2, 0, 1, 3);
  } catch (const CoprimalityViolation& e) {
    CHECK(e.k() == 1);
    CHECK(e.det().is_zero());
  }
  const auto a1 = build_root_datum(Family::A, 1);
  CHECK_THROWS_AS(dual_heisenberg(a1, 0, 1, 4), CoprimalityViolation);
}

TEST_CASE("Heisenberg kernels") {
  const auto a1 = build_root_datum(Family::A, 1);
  const auto a2 = build_root_datum(Family::A, 2);
  CHECK(heisenberg_kernel(a1, 3, 4).kernel_dims == std::vector<int>{0, 0, 0, 0});
  CHECK(heisenberg_kernel(a2, 2, 4).kernel_dims == std::vector<int>{0, 0, 0, 0});
  CHECK(heisenberg_kernel(a2, 0, 3).kernel_dims == std::vector<int>{0, 0, 0});
  const auto bad = heisenberg_kernel(a2, 3, 3);
  CHECK(bad.kernel_dims == std::vector<int>{1, 2, 2});
  CHECK(bad.singular_k == std::vector<int>{1, 2});
}

TEST_CASE("irreducibility certificates") {
  const auto a1 = build_root_datum(Family::A, 1);
  const auto a2 = build_root_datum(Family::A, 2);
  const auto good = certify_irreducible(a1, 3, 3);
  CHECK(good.coprime);
  CHECK(good.dual_delta_ok);
  CHECK(good.weight_dims_ok);
  REQUIRE(good.search);
  CHECK_FALSE(good.search->found());
  CHECK(good.irreducible_to_depth());

  const auto bad = certify_irreducible(a2, 3, 2);
  CHECK_FALSE(bad.coprime);
  CHECK_FALSE(bad.irreducible_to_depth());
  REQUIRE(bad.search);
  CHECK(bad.search->found());

  // Coprimality is sufficient, not necessary: [2] = -2 at l = 2.
  const auto even = certify_irreducible(a1, 2, 3);
  CHECK_FALSE(even.coprime);
  CHECK(even.irreducible_to_depth());
}
