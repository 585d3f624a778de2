#include "doctest.h"

#include "qfock/verify.hpp"

using namespace qfock;

TEST_CASE("multivariate arithmetic") {
  const auto x = MultivarLaurent::variable(2, 0);
  const auto y = MultivarLaurent::variable(2, 1);
  const auto one = MultivarLaurent::constant(2, BigInt(1));
  const auto p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.permuted({1, 0}) == -p);
  CHECK((p - p).is_zero());
  CHECK(MultivarLaurent::variable(2, 0, -1) * x == one);
  CHECK(MultivarLaurent::from_laurent(qint(3), 2, 1).collapse(1) == qint(3));
  CHECK_THROWS(p.collapse(1));
  CHECK(p.coeff({2, 0}) == 1);
  CHECK(p.coeff({1, 1}) == 0);
}

TEST_CASE("symmetrization identity") {
  for (int r = 1; r <= 4; ++r) {
    const auto c = verify_lemma_id(r);
    CAPTURE(r);
    CHECK(c.passed);
    CHECK(c.residual_terms == 0);
  }
}

TEST_CASE("Vandermonde square and r! divisibility") {
  for (int r = 2; r <= 4; ++r) {
    for (const auto& c : verify_rfact(r, 3)) {
      CAPTURE(c.name);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("Drinfeld relations at small depth") {
  DrinfeldOptions opt;
  opt.depth = 2;
  opt.rmax = 2;
  const auto rep = verify_drinfeld(build_root_datum(Family::A, 2), opt);
  CHECK(rep.passed());
  bool saw_printed = false;
  for (const auto& c : rep.results) {
    CAPTURE(c.name);
    CHECK(c.checks > 0);
    if (c.name == "hx_line2_printed") {
      saw_printed = true;
      CHECK(c.informational);
      CHECK_FALSE(c.passed);
    }
  }
  CHECK(saw_printed);
}

TEST_CASE("product formula") {
  const auto d = build_root_datum(Family::A, 2);
  const auto rep = verify_product_suite(d, 3, 1, 1);
  CHECK(rep.passed());
  CHECK(rep.results.size() == enumerate_basis(d, 1).size() * 2 * 3);
}

TEST_CASE("lattice and character suites") {
  const auto a1 = build_root_datum(Family::A, 1);
  CHECK(verify_lattice(a1, 3, 2, 3).passed());
  const auto ch = verify_character(build_root_datum(Family::A, 2), 4);
  CHECK(ch.passed());
  CHECK(ch.results.back().detail == "1,8,17,46,98");
}
