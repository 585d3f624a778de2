#pragma once

// Verification suites: symbolic identities in several variables, operator
// relations on the Fock module, lattice preservation, and independent oracles.

#include <map>
#include <string>
#include <vector>

#include "qfock/fock.hpp"
#include "qfock/laurent.hpp"
#include "qfock/root_datum.hpp"

namespace qfock {

/// Sparse Laurent polynomial in nvars variables with integer coefficients.
class MultivarLaurent {
 public:
  using Exponents = std::vector<int>;

  explicit MultivarLaurent(int nvars = 0) : nvars_(nvars) {}
  static MultivarLaurent constant(int nvars, const BigInt& c);
  static MultivarLaurent variable(int nvars, int var, int power = 1);
  static MultivarLaurent monomial(Exponents e, const BigInt& c);
  /// Embeds a one-variable polynomial as a polynomial in variable var.
  static MultivarLaurent from_laurent(const LaurentZ& p, int nvars, int var);

  int nvars() const { return nvars_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  BigInt coeff(const Exponents& e) const;

  MultivarLaurent operator-() const;
  MultivarLaurent& operator+=(const MultivarLaurent& o);
  MultivarLaurent& operator-=(const MultivarLaurent& o);
  friend MultivarLaurent operator+(MultivarLaurent a, const MultivarLaurent& b) { return a += b; }
  friend MultivarLaurent operator-(MultivarLaurent a, const MultivarLaurent& b) { return a -= b; }
  friend MultivarLaurent operator*(const MultivarLaurent& a, const MultivarLaurent& b);
  friend bool operator==(const MultivarLaurent& a, const MultivarLaurent& b) { return a.terms_ == b.terms_; }

  /// Renames variable k to perm[k].
  MultivarLaurent permuted(const std::vector<int>& perm) const;
  /// The polynomial in variable var alone; throws if another variable occurs.
  LaurentZ collapse(int var) const;

 private:
  void add_term(const Exponents& e, const BigInt& c);

  int nvars_;
  std::map<Exponents, BigInt> terms_;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = true;
  bool informational = false;  // reported, never counted as a failure
  long checks = 0;
  long residual_terms = 0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> results;
  bool passed() const;
  long failures() const;
};

/// sum_sigma sgn(sigma) prod_{k<s} (z_sk - q^-2 z_ss) = q^{-r(r-1)/2} [r]! prod_{k<s} (z_k - z_s).
CheckResult verify_lemma_id(int r);
/// Part (i): Vandermonde square as a sum over mu = delta + tau(delta).
/// Part (ii): diagonal coefficients of V^2 G divisible by r! for G in a basis
/// of symmetric polynomials of degree <= max_degree.
std::vector<CheckResult> verify_rfact(int r, int max_degree = 4);

struct DrinfeldOptions {
  int depth = 4;    // basis vectors of energy <= depth
  int rmax = 3;     // Heisenberg modes 1..rmax of either sign
  int smax = 2;     // vertex-operator modes |s| <= smax
  int serre_max = 1;  // Serre indices in [-serre_max, serre_max]
};

/// Residuals of the Drinfeld relations with C acting as q.
SuiteReport verify_drinfeld(const RootDatum& d, const DrinfeldOptions& opt);

/// Symmetrized r-fold product of X^+_i coefficients: the closed normal-ordered
/// formula against sums of iterated modes, plus the diagonal divided-power check.
CheckResult verify_product_formula(const RootDatum& d, int i, int r, const BasisLabel& state, int nmax = 2);
SuiteReport verify_product_suite(const RootDatum& d, int rmax, int depth, int nmax = 2);

/// Divided powers of x^{+-}_{i,n} preserve the lattice.
SuiteReport verify_lattice(const RootDatum& d, int depth, int nmax, int rmax);
/// x^+_{i,-m-1}(1 (x) e^eta) and x^-_{i,m-1}(1 (x) e^eta), coordinates of eta in [-range, range].
SuiteReport verify_r1(const RootDatum& d, int range);
/// Weight multiplicities against an independent generating-function count.
SuiteReport verify_character(const RootDatum& d, int depth);

/// Number of colored partitions of k with the given number of colors, from
/// the product formula prod_m (1 - x^m)^{-colors}.
std::vector<BigInt> colored_partition_counts(int colors, int kmax);

/// apply_x recomputed in the power-sum basis (exponentials of the derivation
/// and of multiplication by power sums, then Newton transitions back).
FockQ apply_x_via_power_sums(const RootDatum& d, int i, int sign, int n, const FockQ& v);

}  // namespace qfock
