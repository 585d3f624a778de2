#include "doctest.h"

#include "qfock/fock.hpp"
#include "qfock/verify.hpp"

using namespace qfock;

namespace {

FockQ apply(const RootDatum& d, int i, int sign, int n, const FockQ& v) { return apply_x(d, i, sign, n, v); }

FockQ state(const RootDatum& d, const char* text) { return parse_state(text, d); }

}  // namespace

// Reference values from an independent symbolic model (tests/oracles/vertex_operators.py).
TEST_CASE("vertex operators against the symbolic model: A1") {
  const auto d = build_root_datum(Family::A, 1);
  const FockQ vac = promote(vacuum(d));
  CHECK(apply(d, 0, 1, -2, vac) == state(d, "{1:[1]} @ eta=[1]"));
  CHECK(apply(d, 0, 1, -1, vac) == state(d, "{} @ eta=[1]"));
  CHECK(apply(d, 0, 1, 0, vac).is_zero());
  CHECK(promote(apply_x_divided(d, 0, 1, -2, 2, vacuum(d))) == state(d, "(-q^-1)*{} @ eta=[2]"));
}

TEST_CASE("vertex operators against the symbolic model: A2") {
  const auto d = build_root_datum(Family::A, 2);
  const FockQ v = state(d, "{2:[1]} @ eta=[0,1]");
  CHECK(apply(d, 0, 1, -1, v) == state(d, "{1:[1], 2:[1]} @ eta=[1,1] + (q^-1)*{1:[2]} @ eta=[1,1]"));
  CHECK(apply(d, 0, 1, -2, v) == state(d, "{1:[2], 2:[1]} @ eta=[1,1] + (q^-1)*{1:[3]} @ eta=[1,1]"));
  CHECK(apply(d, 0, -1, 0, v).is_zero());
  CHECK(apply(d, 1, -1, 1, v) == state(d, "(-q^2)*{2:[1]} @ eta=[0,0]"));
  CHECK(apply(d, 1, -1, -2, promote(vacuum(d))) == state(d, "(-q)*{2:[1]} @ eta=[0,-1]"));

  const FockQ w = state(d, "{1:[2], 2:[1]} @ eta=[1,0]");
  CHECK(apply(d, 1, 1, -1, w) ==
        state(d,
              "(q^-4+q^-2)*{2:[4]} @ eta=[1,1] + (-q^-2)*{2:[3,1]} @ eta=[1,1] + (q^-3+q^-1)*{1:[1], 2:[3]} @ eta=[1,1]"
              " + (-q^-1)*{1:[1], 2:[2,1]} @ eta=[1,1] + (q^-2+1)*{1:[2], 2:[2]} @ eta=[1,1]"
              " + (-1)*{1:[2], 2:[1,1]} @ eta=[1,1]"));
  CHECK(apply(d, 0, -1, -1, w) ==
        state(d,
              "(-q^2-q^4-q^6)*{1:[4], 2:[1]} @ eta=[0,0] + (q^2+q^4+2*q^6)*{1:[3,1], 2:[1]} @ eta=[0,0]"
              " + (q^4+q^6)*{1:[2,2], 2:[1]} @ eta=[0,0] + (-q^4-3*q^6)*{1:[2,1,1], 2:[1]} @ eta=[0,0]"
              " + (q^6)*{1:[1,1,1,1], 2:[1]} @ eta=[0,0] + (q^3+q^5+q^7)*{1:[5]} @ eta=[0,0]"
              " + (-q^3-q^5-2*q^7)*{1:[4,1]} @ eta=[0,0] + (-q^3-2*q^5-2*q^7)*{1:[3,2]} @ eta=[0,0]"
              " + (q^3+q^5+3*q^7)*{1:[3,1,1]} @ eta=[0,0] + (2*q^5+3*q^7)*{1:[2,2,1]} @ eta=[0,0]"
              " + (-q^5-4*q^7)*{1:[2,1,1,1]} @ eta=[0,0] + (q^7)*{1:[1,1,1,1,1]} @ eta=[0,0]"));
}

TEST_CASE("closed form agrees with the power-sum route") {
  for (const auto& [family, rank] : {std::pair{Family::A, 1}, std::pair{Family::A, 3}, std::pair{Family::D, 4}}) {
    const auto d = build_root_datum(family, rank);
    CAPTURE(d.name());
    for (const auto& b : enumerate_basis(d, 2)) {
      const FockQ v = FockQ::basis(b);
      for (int i = 0; i < d.rank; ++i) {
        for (int sign : {1, -1}) {
          for (int n = -2; n <= 1; ++n) CHECK(apply_x_via_power_sums(d, i, sign, n, v) == apply_x(d, i, sign, n, v));
        }
      }
    }
  }
}

TEST_CASE("modes shift energy by -n") {
  const auto d = build_root_datum(Family::A, 2);
  for (const auto& b : enumerate_basis(d, 3)) {
    for (int n = -2; n <= 2; ++n) {
      const FockZ w = apply_x(d, 1, 1, n, FockZ::basis(b));
      if (!w.is_zero()) CHECK(homogeneous_energy(d, w) == energy(d, b) - n);
    }
  }
}

TEST_CASE("single x on 1 (x) e^eta: cocycle sign and eta shift") {
  const auto d = build_root_datum(Family::A, 2);
  const auto report = verify_r1(d, 2);
  CHECK(report.passed());
  CHECK(report.results.size() == 4);
}

TEST_CASE("divided powers stay in the lattice; undivided powers carry [r]!") {
  const auto d = build_root_datum(Family::A, 1);
  for (const auto& b : enumerate_basis(d, 3)) {
    const FockZ v = FockZ::basis(b);
    for (int n = -2; n <= 2; ++n) {
      const FockZ x2 = apply_x(d, 0, -1, n, apply_x(d, 0, -1, n, v));
      CHECK(apply_x_divided(d, 0, -1, n, 2, v).scaled(qint(2)) == x2);
    }
  }
}

TEST_CASE("Heisenberg and torus actions") {
  const auto d = build_root_datum(Family::A, 2);
  const FockQ v = state(d, "{1:[1], 2:[2]} @ eta=[1,-1]");
  // h~ = k h / [k]
  for (int k : {-2, -1, 1, 2}) {
    const int a = k > 0 ? k : -k;
    CHECK(promote(apply_htilde(d, 0, k, to_integral(v))).scaled(promote(qint(a))) == apply_h(d, 0, k, v).scaled(LaurentQ(BigRat(a))));
  }
  // K_1 eigenvalue q^{(eta, alpha_1)} = q^3; D eigenvalue q^{-energy}, energy 3 + 3.
  CHECK(apply_torus(d, Torus::K, 0, 1, v) == v.scaled(LaurentQ::monomial(3, BigRat(1))));
  CHECK(apply_torus(d, Torus::D, 0, 2, v) == v.scaled(LaurentQ::monomial(-12, BigRat(1))));
  CHECK(apply_torus(d, Torus::C, 0, -1, v) == v.scaled(LaurentQ::monomial(-1, BigRat(1))));
  // psi^+_0 = K, psi^-_0 = K^-1
  CHECK(apply_psi(d, 1, 1, 0, v) == apply_torus(d, Torus::K, 1, 1, v));
  CHECK(apply_psi(d, 1, -1, 0, v) == apply_torus(d, Torus::K, 1, -1, v));
}

TEST_CASE("basis enumeration and character") {
  const auto a1 = build_root_datum(Family::A, 1);
  const long totals[] = {1, 3, 4, 7, 13, 19, 29};
  std::vector<long> by_energy(7, 0);
  for (const auto& b : enumerate_basis(a1, 6)) ++by_energy[energy(a1, b)];
  for (int e = 0; e <= 6; ++e) CHECK(by_energy[e] == totals[e]);
  CHECK(basis_of_energy(a1, 4).size() == 13);

  const auto a2 = build_root_datum(Family::A, 2);
  CHECK(basis_of_energy(a2, 2).size() == 17);
  CHECK(character(a2, 2).at(WeightLabel{{0, 0}, 2}) == 5);
  CHECK(character(a2, 2).at(WeightLabel{{1, 1}, 2}) == 2);

  const auto d4 = build_root_datum(Family::D, 4);
  CHECK(basis_of_energy(d4, 3).size() == 568);

  const auto e = enumerate_basis(a2, 3);
  CHECK(std::is_sorted(e.begin(), e.end(), [&](const BasisLabel& x, const BasisLabel& y) {
    return energy(a2, x) < energy(a2, y);
  }));
}

TEST_CASE("state text round trip and errors") {
  const auto d = build_root_datum(Family::A, 2);
  for (const auto& b : enumerate_basis(d, 3)) {
    const FockQ v = FockQ::basis(b, LaurentQ::monomial(-1, BigRat(-3, 2)) + LaurentQ(2));
    CHECK(parse_state(to_string(v), d) == v);
  }
  CHECK(parse_state("0", d).is_zero());
  CHECK(parse_state("-2*{} @ eta=[0,0]", d) == FockQ::basis(vacuum_label(d), LaurentQ(-2)));
  CHECK_THROWS_AS(parse_state("{} @ eta=[0]", d), ParseError);
  CHECK_THROWS_AS(parse_state("{} eta=[0,0]", d), ParseError);
  CHECK_THROWS_AS(parse_state("(q*{} @ eta=[0,0]", d), ParseError);
}
